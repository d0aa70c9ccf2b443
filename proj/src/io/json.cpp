#include "semisep/io/json.hpp"

#include "semisep/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace semisep::io {

namespace {

const std::string kCompose = "\xE2\x88\x98";  // ∘

std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

template <class F>
auto rethrow_at(const Node& n, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        if (!e.where().empty() && e.where().rfind(n.where(), 0) == 0) throw;
        std::string msg = e.what();
        if (!e.where().empty()) msg = msg.substr(e.where().size() + 2);
        if (!e.where().empty() && e.where().front() == '/') throw InputError(msg, n.where() + e.where());
        throw InputError(msg, n.where());
    }
}

void require_empty(const Node& n, const std::vector<std::string>& violations) {
    if (violations.empty()) return;
    std::string msg = "invalid structure:";
    for (const auto& v : violations) msg += " " + v + ";";
    msg.pop_back();
    n.fail(msg);
}

Field field_of(const Node& n, const LoadOptions& o) {
    if (o.field) return *o.field;
    if (!n.has("field")) return Field::rationals();
    auto tag = n["field"].str();
    try {
        return Field::parse(tag);
    } catch (const std::exception&) {
        n["field"].fail("unknown field '" + tag + "' (expected Q or Fp:<p>)");
    }
}

std::vector<std::string> basis_names(const Node& n, std::size_t dim, const std::string& prefix) {
    if (!n.has("basis")) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < dim; ++i) out.push_back(prefix + std::to_string(i));
        return out;
    }
    auto b = n["basis"].strings();
    if (b.size() != dim) n["basis"].fail("expected " + std::to_string(dim) + " names");
    return b;
}

std::vector<Matrix> matrices(const Node& n, std::size_t count, std::size_t rows, std::size_t cols, Field f) {
    if (n.size() != count) n.fail("expected " + std::to_string(count) + " matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(n[i].matrix(f, rows, cols));
    return out;
}

}  // namespace

Node::Node(std::shared_ptr<const Json> root, const Json* value, std::filesystem::path file, std::filesystem::path shown,
           std::string pointer)
    : root_(std::move(root)),
      value_(value),
      file_(std::move(file)),
      shown_(std::move(shown)),
      pointer_(std::move(pointer)) {}

Node Node::load(const std::filesystem::path& file, const std::filesystem::path& shown_as) {
    const auto shown = shown_as.empty() ? file : shown_as;
    if (!std::filesystem::exists(file)) throw InputError("missing fixture", shown.string());
    std::ifstream in(file);
    if (!in) throw InputError("cannot open file", shown.string());
    auto doc = std::make_shared<Json>();
    try {
        *doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what(), shown.string());
    }
    Node n(doc, doc.get(), file, shown, "");
    if (!doc->is_object()) n.fail("expected an object");
    if (!n.has("schema_version")) n.fail("missing \"schema_version\"");
    if (n["schema_version"].count() != static_cast<std::size_t>(kSchemaVersion))
        n["schema_version"].fail("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
    return n;
}

Node Node::from(Json doc, std::string name) {
    auto root = std::make_shared<Json>(std::move(doc));
    std::filesystem::path shown(name);
    return Node(root, root.get(), shown, shown, "");
}

std::string Node::where() const { return shown_.string() + "#" + pointer_; }

void Node::fail(const std::string& what) const { throw InputError(what, where()); }

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::operator[](const std::string& key) const {
    if (!value_->is_object()) fail("expected an object");
    auto it = value_->find(key);
    if (it == value_->end()) fail("missing \"" + key + "\"");
    return Node(root_, &*it, file_, shown_, pointer_ + "/" + escape(key));
}

Node Node::operator[](std::size_t i) const {
    if (!value_->is_array()) fail("expected an array");
    if (i >= value_->size()) fail("index " + std::to_string(i) + " out of range");
    return Node(root_, &(*value_)[i], file_, shown_, pointer_ + "/" + std::to_string(i));
}

std::size_t Node::size() const {
    if (!value_->is_array()) fail("expected an array");
    return value_->size();
}

std::vector<std::string> Node::keys() const {
    if (!value_->is_object()) fail("expected an object");
    std::vector<std::string> out;
    for (auto it = value_->begin(); it != value_->end(); ++it) out.push_back(it.key());
    return out;
}

Node Node::resolve() const {
    if (value_->is_object()) return *this;
    if (!value_->is_string()) fail("expected an object or a file path");
    auto path = file_.has_parent_path() ? file_.parent_path() / str() : std::filesystem::path(str());
    auto shown = shown_.has_parent_path() ? shown_.parent_path() / str() : std::filesystem::path(str());
    return load(path, shown.lexically_normal());
}

std::string Node::str() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
}

std::size_t Node::count() const {
    if (!value_->is_number_unsigned() && !(value_->is_number_integer() && value_->get<long long>() >= 0))
        fail("expected a non-negative integer");
    return value_->get<std::size_t>();
}

bool Node::boolean() const {
    if (!value_->is_boolean()) fail("expected a boolean");
    return value_->get<bool>();
}

Scalar Node::scalar(Field f) const {
    if (value_->is_number_integer()) return Scalar(value_->get<long long>(), f);
    if (!value_->is_string()) fail("expected a rational as a string or an integer");
    try {
        return Scalar::parse(value_->get<std::string>(), f);
    } catch (const std::exception& e) {
        fail(std::string("bad scalar: ") + e.what());
    }
}

Vector Node::vector(Field f, std::optional<std::size_t> n) const {
    auto sz = size();
    if (n && sz != *n) fail("expected " + std::to_string(*n) + " entries, got " + std::to_string(sz));
    Vector out;
    for (std::size_t i = 0; i < sz; ++i) out.push_back((*this)[i].scalar(f));
    return out;
}

Matrix Node::matrix(Field f, std::size_t rows, std::size_t cols) const {
    if (size() != rows) fail("expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        auto r = (*this)[i].vector(f, cols);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[j];
    }
    return m;
}

std::vector<std::string> Node::strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].str());
    return out;
}

// Loading.

fincat::CategoryPtr load_category(const Node& node, std::vector<std::string>* violations) {
    auto n = node.resolve();
    fincat::CategoryBuilder b;
    std::set<std::string> ids;
    auto objects = n["objects"].strings();
    for (const auto& o : objects) b.object(o);
    for (const auto& o : objects) {
        std::string id = "id" + o;
        if (n.has("id") && n["id"].has(o)) id = n["id"][o].str();
        rethrow_at(n, [&] { return b.identity(o, id); });
        ids.insert(id);
    }
    if (n.has("id"))
        for (const auto& o : n["id"].keys())
            if (std::find(objects.begin(), objects.end(), o) == objects.end()) n["id"][o].fail("unknown object");
    if (n.has("homs")) {
        auto homs = n["homs"];
        for (const auto& key : homs.keys()) {
            auto arrow = key.find("->");
            if (arrow == std::string::npos) homs[key].fail("hom key must read \"A->B\"");
            auto src = key.substr(0, arrow), tgt = key.substr(arrow + 2);
            for (const auto& m : homs[key].strings()) {
                if (ids.count(m)) continue;
                rethrow_at(homs[key], [&] { return b.morphism(m, src, tgt); });
            }
        }
    }
    if (n.has("comp")) {
        auto comp = n["comp"];
        for (const auto& key : comp.keys()) {
            auto dot = key.find(kCompose);
            if (dot == std::string::npos) comp[key].fail("composite key must read \"g" + kCompose + "f\"");
            auto g = key.substr(0, dot), f = key.substr(dot + kCompose.size());
            b.compose(g, f, comp[key].str());
        }
    }
    if (!violations) return rethrow_at(n, [&] { return b.build(); });
    auto c = rethrow_at(n, [&] { return b.build_unchecked(); });
    *violations = fincat::validate(*c);
    return c;
}

fincat::FinFunctor load_functor(const Node& node, std::vector<std::string>* violations) {
    auto n = node.resolve();
    auto src = load_category(n["source"]);
    auto tgt = load_category(n["target"]);
    std::map<std::string, std::string> objs, mors;
    for (const auto& k : n["objects"].keys()) objs[k] = n["objects"][k].str();
    if (n.has("morphisms"))
        for (const auto& k : n["morphisms"].keys()) mors[k] = n["morphisms"][k].str();
    auto f = rethrow_at(n, [&] { return fincat::FinFunctor::from_names(src, tgt, objs, mors); });
    if (violations) *violations = fincat::validate(f);
    else require_empty(n, fincat::validate(f));
    return f;
}

fincat::NatTrans load_nat_trans(const Node& n, const fincat::FinFunctor& from, const fincat::FinFunctor& to) {
    const auto& c = *from.source;
    fincat::NatTrans a{from, to, std::vector<fincat::Mor>(c.num_objects(), fincat::kNone)};
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        auto name = n[c.object_name(static_cast<fincat::Obj>(x))].str();
        auto m = to.target->find_morphism(name);
        if (!m) n[c.object_name(static_cast<fincat::Obj>(x))].fail("unknown morphism '" + name + "'");
        a.components[x] = *m;
    }
    require_empty(n, fincat::validate(a));
    return a;
}

algstruct::FDAlgebra load_algebra(const Node& node, const LoadOptions& o) {
    auto n = node.resolve();
    algstruct::FDAlgebra a;
    a.field = field_of(n, o);
    a.dim = n["dim"].count();
    a.basis = basis_names(n, a.dim, "b");
    auto mult = n["mult"];
    if (mult.size() != a.dim) mult.fail("expected " + std::to_string(a.dim) + " rows");
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (mult[i].size() != a.dim) mult[i].fail("expected " + std::to_string(a.dim) + " products");
        for (std::size_t j = 0; j < a.dim; ++j) a.mult.push_back(mult[i][j].vector(a.field, a.dim));
    }
    a.unit = n["unit"].vector(a.field, a.dim);
    require_empty(n, algstruct::validate(a));
    return a;
}

algstruct::FDCoalgebra load_coalgebra(const Node& node, const LoadOptions& o) {
    auto n = node.resolve();
    algstruct::FDCoalgebra c;
    c.field = field_of(n, o);
    c.dim = n["dim"].count();
    c.basis = basis_names(n, c.dim, "c");
    for (const auto& m : matrices(n["comult"], c.dim, c.dim, c.dim, c.field)) c.comult.push_back(linalg::flatten(m));
    c.counit = n["counit"].vector(c.field, c.dim);
    require_empty(n, algstruct::validate(c));
    return c;
}

algstruct::Bimodule load_bimodule(const Node& node, const LoadOptions& o) {
    auto n = node.resolve();
    algstruct::Bimodule m;
    m.left_algebra = load_algebra(n["left"], o);
    m.right_algebra = load_algebra(n["right"], o);
    if (!(m.left_algebra.field == m.right_algebra.field)) n.fail("left and right algebras live over different fields");
    m.dim = n["dim"].count();
    auto f = m.field();
    m.left = matrices(n["left_action"], m.left_algebra.dim, m.dim, m.dim, f);
    m.right = matrices(n["right_action"], m.right_algebra.dim, m.dim, m.dim, f);
    require_empty(n, algstruct::validate(m));
    return m;
}

algstruct::Coring load_coring(const Node& node, const LoadOptions& o) {
    auto n = node.resolve();
    algstruct::Coring c;
    c.C = load_bimodule(n["bimodule"], o);
    const auto dim = c.C.dim;
    const auto f = c.C.field();
    c.delta = Matrix(dim * dim, dim, f);
    auto ds = matrices(n["delta"], dim, dim, dim, f);
    for (std::size_t i = 0; i < dim; ++i) c.delta.set_col(i, linalg::flatten(ds[i]));
    c.eps = Matrix(c.C.left_algebra.dim, dim, f);
    auto eps = n["eps"];
    if (eps.size() != dim) eps.fail("expected " + std::to_string(dim) + " values");
    for (std::size_t i = 0; i < dim; ++i) c.eps.set_col(i, eps[i].vector(f, c.C.left_algebra.dim));
    require_empty(n, algstruct::validate(c));
    return c;
}

algstruct::Bialgebra load_bialgebra(const Node& node, const LoadOptions& o) {
    auto n = node.resolve();
    algstruct::Bialgebra b{load_algebra(n["algebra"], o), load_coalgebra(n["coalgebra"], o)};
    require_empty(n, algstruct::validate(b));
    return b;
}

namespace {

Matrix images(const Node& n, std::size_t source_dim, std::size_t target_dim, Field f) {
    Matrix m(target_dim, source_dim, f);
    if (n.size() != source_dim) n.fail("expected " + std::to_string(source_dim) + " images");
    for (std::size_t i = 0; i < source_dim; ++i) m.set_col(i, n[i].vector(f, target_dim));
    return m;
}

}  // namespace

algstruct::AlgebraMap load_algebra_map(const Node& node, const LoadOptions& o) {
    auto n = node.resolve();
    algstruct::AlgebraMap phi;
    phi.source = load_algebra(n["source"], o);
    phi.target = load_algebra(n["target"], o);
    if (!(phi.source.field == phi.target.field)) n.fail("source and target live over different fields");
    phi.matrix = images(n["images"], phi.source.dim, phi.target.dim, phi.source.field);
    if (o.check_maps) require_empty(n, algstruct::validate(phi));
    return phi;
}

algstruct::CoalgebraMap load_coalgebra_map(const Node& node, const LoadOptions& o) {
    auto n = node.resolve();
    algstruct::CoalgebraMap psi;
    psi.source = load_coalgebra(n["source"], o);
    psi.target = load_coalgebra(n["target"], o);
    if (!(psi.source.field == psi.target.field)) n.fail("source and target live over different fields");
    psi.matrix = images(n["images"], psi.source.dim, psi.target.dim, psi.source.field);
    if (o.check_maps) require_empty(n, algstruct::validate(psi));
    return psi;
}

// Serialization.

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Json to_json(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

Json to_json(const Verdict& v) {
    Json out{{"status", to_string(v.status)}};
    if (v.rank || v.rank_augmented) {
        out["rank"] = v.rank;
        out["rank_augmented"] = v.rank_augmented;
    }
    if (!v.detail.empty()) out["detail"] = v.detail;
    return out;
}

Json to_json(const Certificates& cs) {
    Json out = Json::array();
    for (const auto& c : cs) {
        Json j{{"law", c.law}, {"holds", c.holds}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        out.push_back(std::move(j));
    }
    return out;
}

Json to_json(const fincat::FinCategory& c) {
    Json out{{"schema_version", kSchemaVersion}, {"objects", Json::array()}, {"homs", Json::object()},
             {"id", Json::object()}, {"comp", Json::object()}};
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        out["objects"].push_back(c.object_name(static_cast<fincat::Obj>(x)));
        out["id"][c.object_name(static_cast<fincat::Obj>(x))] = c.morphism_name(c.identity(static_cast<fincat::Obj>(x)));
    }
    const auto n = static_cast<fincat::Mor>(c.num_morphisms());
    for (fincat::Mor f = 0; f < n; ++f) {
        if (c.is_identity(f)) continue;
        auto key = c.object_name(c.source(f)) + "->" + c.object_name(c.target(f));
        out["homs"][key].push_back(c.morphism_name(f));
    }
    for (fincat::Mor f = 0; f < n; ++f)
        for (fincat::Mor g = 0; g < n; ++g) {
            if (c.is_identity(f) || c.is_identity(g) || c.source(g) != c.target(f)) continue;
            auto h = c.composite_or_none(g, f);
            if (h != fincat::kNone) out["comp"][c.morphism_name(g) + kCompose + c.morphism_name(f)] = c.morphism_name(h);
        }
    return out;
}

Json to_json(const fincat::FinFunctor& f) {
    Json out{{"schema_version", kSchemaVersion}, {"source", to_json(*f.source)}, {"target", to_json(*f.target)},
             {"objects", Json::object()}, {"morphisms", Json::object()}};
    for (std::size_t x = 0; x < f.obj_map.size(); ++x)
        out["objects"][f.source->object_name(static_cast<fincat::Obj>(x))] = f.target->object_name(f.obj_map[x]);
    for (std::size_t m = 0; m < f.mor_map.size(); ++m)
        out["morphisms"][f.source->morphism_name(static_cast<fincat::Mor>(m))] = f.target->morphism_name(f.mor_map[m]);
    return out;
}

Json to_json(const fincat::NatTrans& a) {
    Json out = Json::object();
    for (std::size_t x = 0; x < a.components.size(); ++x)
        out[a.from.source->object_name(static_cast<fincat::Obj>(x))] = a.to.target->morphism_name(a.components[x]);
    return out;
}

Json to_json(const algstruct::FDAlgebra& a) {
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim; ++j) row.push_back(to_json(a.mult[i * a.dim + j]));
        mult.push_back(std::move(row));
    }
    return Json{{"schema_version", kSchemaVersion}, {"field", a.field.tag()}, {"dim", a.dim},
                {"basis", a.basis},  {"mult", mult},         {"unit", to_json(a.unit)}};
}

Json to_json(const algstruct::FDCoalgebra& c) {
    Json comult = Json::array();
    for (const auto& d : c.comult) comult.push_back(to_json(linalg::unflatten(d, c.dim, c.dim, c.field)));
    return Json{{"schema_version", kSchemaVersion}, {"field", c.field.tag()}, {"dim", c.dim},
                {"basis", c.basis},  {"comult", comult},       {"counit", to_json(c.counit)}};
}

Json to_json(const algstruct::Bimodule& m) {
    return Json{{"schema_version", kSchemaVersion},   {"left", to_json(m.left_algebra)},
                {"right", to_json(m.right_algebra)},  {"dim", m.dim},
                {"left_action", to_json(m.left)},     {"right_action", to_json(m.right)}};
}

Json to_json(const algstruct::Coring& c) {
    const auto dim = c.C.dim;
    Json delta = Json::array(), eps = Json::array();
    for (std::size_t i = 0; i < dim; ++i) {
        delta.push_back(to_json(linalg::unflatten(c.delta.col(i), dim, dim, c.C.field())));
        eps.push_back(to_json(c.eps.col(i)));
    }
    return Json{{"schema_version", kSchemaVersion}, {"bimodule", to_json(c.C)}, {"delta", delta}, {"eps", eps}};
}

Json to_json(const algstruct::Bialgebra& b) {
    return Json{{"schema_version", kSchemaVersion}, {"algebra", to_json(b.algebra)}, {"coalgebra", to_json(b.coalgebra)}};
}

namespace {

Json images_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_json(m.col(j)));
    return out;
}

}  // namespace

Json to_json(const algstruct::AlgebraMap& f) {
    return Json{{"schema_version", kSchemaVersion}, {"source", to_json(f.source)}, {"target", to_json(f.target)},
                {"images", images_json(f.matrix)}};
}

Json to_json(const algstruct::CoalgebraMap& f) {
    return Json{{"schema_version", kSchemaVersion}, {"source", to_json(f.source)}, {"target", to_json(f.target)},
                {"images", images_json(f.matrix)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace semisep::io
