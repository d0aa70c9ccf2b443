#include "internal.hpp"

#include "semisep/adjunction/adjunction.hpp"
#include "semisep/coident/coidentifier.hpp"
#include "semisep/errors.hpp"
#include "semisep/hopf/hopf.hpp"
#include "semisep/sepcheck/sepcheck.hpp"

namespace semisep::cli {

using io::Node;
using io::to_json;

namespace detail {

io::LoadOptions load_options(const Json& params) {
    io::LoadOptions o;
    if (params.contains("field")) {
        try {
            o.field = linalg::Field::parse(params["field"].get<std::string>());
        } catch (const std::exception&) {
            throw InputError("unknown field '" + params["field"].get<std::string>() + "' (expected Q or Fp:<p>)",
                             "--field");
        }
    }
    return o;
}

std::size_t bound_or(const Json& params, std::size_t fallback) {
    return params.contains("bound") ? params["bound"].get<std::size_t>() : fallback;
}

Mode mode_of(const Json& params) {
    auto s = params.value("mode", std::string("semiseparable"));
    try {
        return fincat::parse_mode(s);
    } catch (const std::exception&) {
        throw InputError("unknown mode '" + s + "' (expected semiseparable, separable or naturally_full)", "--mode");
    }
}

Json family_json(const HomFamily& p) {
    const auto& c = *p.F.source;
    const auto& d = *p.F.target;
    const auto n = c.num_objects();
    Json out = Json::array();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto& hk = d.hom(p.F(static_cast<fincat::Obj>(x)), p.F(static_cast<fincat::Obj>(y)));
            if (hk.empty()) continue;
            Json images = Json::object();
            for (std::size_t i = 0; i < hk.size(); ++i) {
                auto v = p.values[x * n + y][i];
                images[d.morphism_name(hk[i])] = v == fincat::kNone ? Json() : Json(c.morphism_name(v));
            }
            out.push_back({{"source", c.object_name(static_cast<fincat::Obj>(x))},
                           {"target", c.object_name(static_cast<fincat::Obj>(y))},
                           {"images", images}});
        }
    return out;
}

HomFamily family_from(const Node& n, const FinFunctor& f) {
    const auto& c = *f.source;
    const auto& d = *f.target;
    const auto no = c.num_objects();
    HomFamily p{f, FinFunctor::identity(f.source), std::vector<std::vector<fincat::Mor>>(no * no)};
    for (std::size_t x = 0; x < no; ++x)
        for (std::size_t y = 0; y < no; ++y)
            p.values[x * no + y].assign(d.hom(f(static_cast<fincat::Obj>(x)), f(static_cast<fincat::Obj>(y))).size(),
                                        fincat::kNone);
    for (std::size_t i = 0; i < n.size(); ++i) {
        auto e = n[i];
        auto x = c.find_object(e["source"].str());
        auto y = c.find_object(e["target"].str());
        if (!x || !y) e.fail("unknown object");
        const auto& hk = d.hom(f(*x), f(*y));
        auto images = e["images"];
        for (const auto& key : images.keys()) {
            auto k = d.find_morphism(key);
            auto it = k ? std::find(hk.begin(), hk.end(), *k) : hk.end();
            if (it == hk.end()) images[key].fail("'" + key + "' is not in the image hom-set");
            auto v = c.find_morphism(images[key].str());
            if (!v) images[key].fail("unknown morphism");
            p.values[*x * no + *y][static_cast<std::size_t>(it - hk.begin())] = *v;
        }
    }
    return p;
}

Json components_json(const fincat::FinCategory& c, const std::vector<fincat::Mor>& comps) {
    Json out = Json::object();
    for (std::size_t x = 0; x < comps.size(); ++x)
        out[c.object_name(static_cast<fincat::Obj>(x))] = c.morphism_name(comps[x]);
    return out;
}

std::vector<fincat::Mor> components_from(const Node& n, const fincat::FinCategory& c) {
    std::vector<fincat::Mor> out;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        auto name = c.object_name(static_cast<fincat::Obj>(x));
        auto m = c.find_morphism(n[name].str());
        if (!m) n[name].fail("unknown morphism");
        out.push_back(*m);
    }
    return out;
}

namespace {

Certificate cert(std::string law, bool holds, std::string detail = "") {
    return {std::move(law), holds, std::move(detail)};
}

std::string joined(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
}

}  // namespace

Certificates check_regularity(const adjunction::Adjunction& a, adjunction::Side side, const NatTrans& w, Mode mode) {
    Certificates cs;
    auto bad = fincat::validate(w);
    cs.push_back(cert("witness natural", bad.empty(), joined(bad)));
    if (!bad.empty()) return cs;
    const bool left = side == adjunction::Side::left;
    const auto& cat = left ? *a.F.source : *a.F.target;
    const auto& u = left ? a.unit : a.counit;
    bool ok = true;
    for (std::size_t x = 0; x < w.components.size(); ++x) {
        const auto ux = u.components[x], wx = w.components[x];
        switch (mode) {
            case Mode::semiseparable:
                ok = ok && cat.compose(ux, cat.compose(wx, ux)) == ux;
                break;
            case Mode::separable:
                ok = ok && (left ? cat.compose(wx, ux) : cat.compose(ux, wx)) == cat.identity(static_cast<fincat::Obj>(x));
                break;
            case Mode::naturally_full: {
                auto m = left ? cat.compose(ux, wx) : cat.compose(wx, ux);
                ok = ok && cat.is_identity(m);
                break;
            }
        }
    }
    static const char* names[2][3] = {{"unit nu unit = unit", "nu unit = Id", "unit nu = Id"},
                                      {"counit gamma counit = counit", "counit gamma = Id", "gamma counit = Id"}};
    cs.push_back(cert(names[left ? 0 : 1][static_cast<int>(mode)], ok));
    return cs;
}

NatTrans regularity_from(const Node& n, const adjunction::Adjunction& a, adjunction::Side side) {
    if (side == adjunction::Side::left)
        return io::load_nat_trans(n, fincat::compose(a.G, a.F), FinFunctor::identity(a.F.source));
    return io::load_nat_trans(n, FinFunctor::identity(a.F.target), fincat::compose(a.F, a.G));
}

Json adjunction_json(const adjunction::Adjunction& a) {
    return {{"unit", to_json(a.unit)}, {"counit", to_json(a.counit)}};
}

adjunction::Adjunction adjunction_from(const Node& n, const FinFunctor& f, const FinFunctor& g) {
    adjunction::Adjunction a{f, g, io::load_nat_trans(n["unit"], FinFunctor::identity(f.source), fincat::compose(g, f)),
                             io::load_nat_trans(n["counit"], fincat::compose(f, g), FinFunctor::identity(f.target))};
    auto bad = adjunction::validate(a);
    if (!bad.empty()) n.fail("not an adjunction: " + joined(bad));
    return a;
}

Json verification(const Certificates& cs) {
    return {{"verified", all_hold(cs)}, {"method", "witness substitution"}, {"checks", to_json(cs)}};
}

}  // namespace detail

using namespace detail;

int exit_code(Status s) {
    switch (s) {
        case Status::holds: return kHolds;
        case Status::fails: return kFails;
        case Status::indeterminate: return kIndeterminate;
        case Status::error: return kUsage;
    }
    return kUsage;
}

namespace {

Json header(const std::string& command, const Json& params) {
    return {{"schema_version", io::kSchemaVersion}, {"command", command}, {"parameters", params}};
}

void set_status(Json& r, Status s) { r["status"] = to_string(s); }

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::semiseparable: return "semiseparable";
        case Mode::separable: return "separable";
        case Mode::naturally_full: return "naturally_full";
    }
    return "";
}

Node node(const Json& input, const char* key) { return Node::from(input.at(key), std::string("input/") + key); }

// Finite categories.

Json cat_validate(const Json& input, const Json& params) {
    auto r = header("cat validate", params);
    std::vector<std::string> violations;
    if (input.contains("category")) {
        auto c = io::load_category(node(input, "category"), &violations);
        r["objects"] = c->num_objects();
        r["morphisms"] = c->num_morphisms();
    } else {
        auto f = io::load_functor(node(input, "functor"), &violations);
        r["objects"] = f.source->num_objects();
        r["morphisms"] = f.source->num_morphisms();
    }
    set_status(r, violations.empty() ? Status::holds : Status::fails);
    r["violations"] = violations;
    r["input"] = input;
    return r;
}

Json cat_property(const Json& input, const Json& params) {
    auto r = header("cat property", params);
    auto f = io::load_functor(node(input, "functor"));
    auto prop = fincat::parse_functor_property(params.at("property").get<std::string>());
    auto res = fincat::functor_property(f, prop);
    set_status(r, res.holds ? Status::holds : Status::fails);
    if (!res.holds) r["counterexample"] = res.counterexample;
    r["input"] = input;
    return r;
}

Json decide_context(const FinFunctor& f, Mode mode) {
    const auto& c = *f.source;
    if (mode == Mode::separable) {
        auto p = fincat::functor_property(f, fincat::FunctorProperty::faithful);
        if (!p.holds) return {{"pair", p.counterexample}, {"reason", "F identifies a parallel pair"}};
    }
    if (mode == Mode::naturally_full) {
        auto p = fincat::functor_property(f, fincat::FunctorProperty::full);
        if (!p.holds) return {{"missed", p.counterexample}, {"reason", "F is not full"}};
    }
    std::vector<std::vector<fincat::Mor>> es;
    for (auto& e : fincat::nat_endo_monoid(c)) {
        bool idem = true;
        for (std::size_t x = 0; x < e.size(); ++x) idem = idem && c.compose(e[x], e[x]) == e[x];
        if (idem && fincat::functor_inverts(f, e)) es.push_back(e);
    }
    const auto m = static_cast<fincat::Mor>(c.num_morphisms());
    for (fincat::Mor a = 0; a < m; ++a)
        for (fincat::Mor b = a + 1; b < m; ++b) {
            if (c.source(a) != c.source(b) || c.target(a) != c.target(b)) continue;
            if (f.on_morphism(a) != f.on_morphism(b)) continue;
            bool merged = false;
            for (const auto& e : es) merged = merged || c.compose(e[c.target(a)], a) == c.compose(e[c.target(b)], b);
            if (!merged)
                return {{"pair", {c.morphism_name(a), c.morphism_name(b)}},
                        {"reason", "F identifies the pair but no natural idempotent e with Fe = Id merges it"},
                        {"idempotents_with_Fe_identity", es.size()}};
        }
    return {{"reason", "no binatural family satisfies the mode condition"}};
}

Json cat_decide(const Json& input, const Json& params) {
    auto r = header("cat decide", params);
    auto f = io::load_functor(node(input, "functor"));
    auto mode = mode_of(params);
    auto res = fincat::decide_retraction(f, mode, {bound_or(params, 64)});
    set_status(r, res.holds() ? Status::holds : Status::fails);
    r["nodes"] = res.nodes;
    if (res.holds()) r["witness"] = {{"P", family_json(*res.witness)}};
    else r["counterexample"] = decide_context(f, mode);
    r["input"] = input;
    return r;
}

Json cat_idempotent(const Json& input, const Json& params) {
    auto r = header("cat idempotent", params);
    auto f = io::load_functor(node(input, "functor"));
    auto res = fincat::decide_retraction(f, Mode::semiseparable, {bound_or(params, 64)});
    set_status(r, res.holds() ? Status::holds : Status::fails);
    if (res.holds()) {
        auto rep = fincat::associated_idempotent(f, *res.witness);
        r["idempotent"] = {{"identity", rep.e.is_identity()},
                           {"idempotent", rep.idempotent},
                           {"natural", rep.natural},
                           {"inverts_to_identity", rep.inverts_to_identity},
                           {"universal", rep.universal},
                           {"qualifying_count", rep.qualifying_count}};
        r["witness"] = {{"P", family_json(*res.witness)}, {"e", components_json(*f.source, rep.e.components)}};
    }
    r["input"] = input;
    return r;
}

Json cat_coidentifier(const Json& input, const Json& params) {
    auto r = header("cat coidentifier", params);
    auto f = io::load_functor(node(input, "functor"));
    fincat::SearchOptions opts{bound_or(params, 64)};
    if (!fincat::decide_retraction(f, Mode::semiseparable, opts).holds()) {
        set_status(r, Status::fails);
        r["detail"] = "F is not semiseparable, so it has no coidentifier factorization";
        r["input"] = input;
        return r;
    }
    auto fz = coident::factorize_semiseparable(f, opts);
    const auto& q = fz.coidentifier;
    set_status(r, fz.ok() ? Status::holds : Status::fails);
    r["quotient_objects"] = q.quotient->num_objects();
    r["quotient_morphisms"] = q.quotient->num_morphisms();
    r["witness"] = {{"e", components_json(*f.source, q.e.components)},
                    {"quotient", to_json(*q.quotient)},
                    {"H", to_json(q.H)},
                    {"H_witness", family_json(q.witness)},
                    {"Fe", to_json(fz.Fe)},
                    {"Fe_witness", family_json(fz.fe_witness)}};
    auto certs = q.certificates;
    certs.insert(certs.end(), fz.certificates.begin(), fz.certificates.end());
    r["certificates"] = to_json(certs);
    r["input"] = input;
    return r;
}

Json cat_adjunction(const Json& input, const Json& params) {
    auto r = header("cat adjunction", params);
    auto f = io::load_functor(node(input, "left"));
    auto g = io::load_functor(node(input, "right"));
    auto adjs = adjunction::find_adjunctions(f, g);
    if (adjs.empty()) throw PreconditionError("the functors are not adjoint (no unit and counit satisfy the triangles)");
    const auto& a = adjs.front();
    const auto mode = mode_of(params);
    const auto side = params.value("side", std::string("left")) == "right" ? adjunction::Side::right
                                                                            : adjunction::Side::left;
    r["adjunctions_found"] = adjs.size();
    Json reg = Json::object();
    std::optional<NatTrans> witness;
    for (auto sd : {adjunction::Side::left, adjunction::Side::right}) {
        Json block = Json::object();
        for (auto md : {Mode::semiseparable, Mode::separable, Mode::naturally_full}) {
            auto rr = adjunction::rafael_regularity(a, sd, md);
            block[mode_name(md)] = {{"holds", rr.holds()}, {"agrees_with_decider", rr.agrees_with_decider}};
            if (sd == side && md == mode) {
                witness = rr.witness;
                set_status(r, rr.holds() ? Status::holds : Status::fails);
            }
        }
        reg[sd == adjunction::Side::left ? "left" : "right"] = block;
    }
    r["regularity"] = reg;
    auto idem = adjunction::idempotent_adjunction_check(a);
    r["idempotent"] = {{"idempotent", idem.idempotent()}, {"consistent", idem.consistent()}};
    try {
        auto t = adjunction::ssep_monad_theorem(a, bound_or(params, 64));
        r["monad_theorem"] = {{"right_semiseparable", t.right_semiseparable},
                              {"monad_separable", t.monad_separable},
                              {"comparison_naturally_full", t.comparison_natfull},
                              {"left_semiseparable", t.left_semiseparable},
                              {"comonad_coseparable", t.comonad_coseparable},
                              {"cocomparison_naturally_full", t.cocomparison_natfull},
                              {"right_holds", t.right_holds()},
                              {"left_holds", t.left_holds()}};
    } catch (const BoundExceeded& e) {
        r["monad_theorem"] = {{"status", "indeterminate"}, {"detail", e.what()}};
    }
    Json w = adjunction_json(a);
    if (witness) w[side == adjunction::Side::left ? "nu" : "gamma"] = to_json(*witness);
    r["witness"] = w;
    r["input"] = input;
    return r;
}

Json cat_triple(const Json& input, const Json& params) {
    auto r = header("cat triple", params);
    auto f = io::load_functor(node(input, "F"));
    auto g = io::load_functor(node(input, "G"));
    auto h = io::load_functor(node(input, "H"));
    auto l = adjunction::find_adjunctions(f, g);
    auto rt = adjunction::find_adjunctions(g, h);
    if (l.empty() || rt.empty()) throw PreconditionError("the functors do not form an adjoint triple F ⊣ G ⊣ H");
    adjunction::AdjointTriple t{l.front(), rt.front()};
    auto rep = adjunction::adjoint_triple(t);
    const auto mode = mode_of(params);
    const auto i = static_cast<std::size_t>(mode);
    Json fs = Json::object(), hs = Json::object(), gs = Json::object();
    for (auto md : {Mode::semiseparable, Mode::separable, Mode::naturally_full}) {
        auto k = static_cast<std::size_t>(md);
        fs[mode_name(md)] = rep.F[k];
        hs[mode_name(md)] = rep.H[k];
        gs[mode_name(md)] = rep.gamma_ok[k];
    }
    r["F"] = fs;
    r["H"] = hs;
    r["transported_witness_ok"] = gs;
    r["consistent"] = rep.consistent();
    set_status(r, rep.H[i] ? Status::holds : Status::fails);
    Json w{{"left", adjunction_json(t.left)}, {"right", adjunction_json(t.right)}};
    if (rep.gamma[i] && rep.gamma_ok[i]) w["gamma"] = to_json(*rep.gamma[i]);
    else if (rep.H[i]) w["gamma"] = to_json(*adjunction::rafael_regularity(t.right, adjunction::Side::right, mode).witness);
    r["witness"] = w;
    r["input"] = input;
    return r;
}

// Algebraic criteria.

Json verdicts3(const Verdict& a, const Verdict& b, const Verdict& c) {
    return {{"semiseparable", to_json(a)}, {"separable", to_json(b)}, {"naturally_full", to_json(c)}};
}

const Verdict& pick(Mode m, const Verdict& a, const Verdict& b, const Verdict& c) {
    return m == Mode::semiseparable ? a : m == Mode::separable ? b : c;
}

Json ring_ext(const Json& input, const Json& params) {
    auto r = header("ring-ext", params);
    auto phi = io::load_algebra_map(node(input, "map"));
    auto mode = mode_of(params);
    auto rep = sepcheck::ring_ext_analyze(phi);
    const auto& v = pick(mode, rep.semiseparable, rep.separable, rep.naturally_full);
    set_status(r, v.status);
    r["verdicts"] = verdicts3(rep.semiseparable, rep.separable, rep.naturally_full);
    if (rep.z) {
        r["z"] = to_json(*rep.z);
        r["z_unique"] = rep.z_unique;
    }
    r["certificates"] = to_json(rep.certificates);
    const auto& e = mode == Mode::semiseparable ? rep.E : mode == Mode::separable ? rep.E_separable : rep.E_naturally_full;
    if (v.holds()) {
        r["witness"] = {{"E", to_json(*e)}};
        if (rep.z) r["witness"]["z"] = to_json(*rep.z);
    }
    r["input"] = input;
    return r;
}

Json coalg_map(const Json& input, const Json& params) {
    auto r = header("coalg-map", params);
    auto psi = io::load_coalgebra_map(node(input, "map"));
    auto mode = mode_of(params);
    auto rep = sepcheck::coalg_map_analyze(psi);
    const auto& v = pick(mode, rep.semiseparable, rep.separable, rep.naturally_full);
    set_status(r, v.status);
    r["verdicts"] = verdicts3(rep.semiseparable, rep.separable, rep.naturally_full);
    r["bicomodule_maps"] = rep.bicomodule_maps;
    const auto& chi =
        mode == Mode::semiseparable ? rep.chi : mode == Mode::separable ? rep.chi_separable : rep.chi_naturally_full;
    if (v.holds()) r["witness"] = {{"chi", to_json(*chi)}};
    r["input"] = input;
    return r;
}

Json coring(const Json& input, const Json& params) {
    auto r = header("coring", params);
    auto c = io::load_coring(node(input, "coring"));
    auto mode = mode_of(params);
    std::optional<sepcheck::SweedlerReport> sw;
    sepcheck::CoringReport rep;
    if (input.contains("sweedler_of")) {
        sw = sepcheck::sweedler_coring(io::load_algebra_map(node(input, "sweedler_of")));
        rep = sw->report;
    } else {
        rep = sepcheck::coring_analyze(c);
    }
    const auto& v = pick(mode, rep.semicosplit, rep.cosplit, rep.natfull_G);
    set_status(r, v.status);
    r["verdicts"] = {{"semicosplit", to_json(rep.semicosplit)},
                     {"cosplit", to_json(rep.cosplit)},
                     {"naturally_full", to_json(rep.natfull_G)},
                     {"eps_regular", to_json(rep.eps_regular)},
                     {"coseparable", to_json(rep.coseparable)}};
    r["agreements"] = {{"equivalent_form", rep.equivalent_form_agrees}, {"regularity", rep.regularity_agrees}};
    if (rep.z) r["eps_z"] = to_json(c.eps.apply(*rep.z));
    if (rep.semicosplit.holds())
        r["factorization_certificates"] = to_json(sepcheck::coring_factorize(c, rep).certificates);
    if (sw) {
        Json s{{"separability_idempotent", to_json(sw->separability_idempotent)},
               {"semicosplit_agrees", sw->sweed1_agrees},
               {"e_condition", to_json(sw->e_condition)},
               {"ring_semiseparable", to_json(sw->ring.semiseparable)},
               {"coseparable_agrees", sw->sweed2_agrees}};
        if (sw->idempotent) s["idempotent"] = to_json(*sw->idempotent);
        r["sweedler"] = s;
    }
    const auto& z = mode == Mode::semiseparable ? rep.z : mode == Mode::separable ? rep.z_cosplit : rep.z_natfull;
    if (v.holds()) r["witness"] = {{"z", to_json(*z)}};
    r["input"] = input;
    return r;
}

Json bimodule(const Json& input, const Json& params) {
    auto r = header("bimodule", params);
    auto m = io::load_bimodule(node(input, "bimodule"));
    auto mode = mode_of(params);
    if (mode == Mode::naturally_full) throw InputError("bimodule criteria take --mode semiseparable or separable", "--mode");
    auto rep = sepcheck::bimodule_analyze(m);
    const auto& v = mode == Mode::semiseparable ? rep.M_semisep : rep.M_sep;
    set_status(r, v.status);
    r["verdicts"] = {{"semiseparable", to_json(rep.M_semisep)},
                     {"separable", to_json(rep.M_sep)},
                     {"evaluation_regular", to_json(rep.ev_regular)},
                     {"evaluation_tensor_surjective", to_json(rep.ev_tensor_surjective)},
                     {"generator", to_json(rep.generator)},
                     {"finitely_generated_projective", to_json(rep.fgp)}};
    Json agree{{"regular_and_surjective", rep.thm_agrees}, {"semiseparable_and_generator", rep.cor_agrees}};
    if (rep.fgp.holds()) {
        auto cr = sepcheck::coring_analyze(sepcheck::comatrix_coring(m));
        agree["comatrix_coring_semicosplit"] = cr.semicosplit.holds() == rep.M_semisep.holds();
        agree["endomorphism_ring_routes"] = sepcheck::endo_ring_analyze(m).agrees;
    }
    r["agreements"] = agree;
    if (rep.z) r["z"] = to_json(*rep.z);
    r["certificates"] = to_json(rep.certificates);
    const auto& t = mode == Mode::semiseparable ? rep.central_tensor_flat : rep.separable_tensor_flat;
    if (v.holds()) r["witness"] = {{"functionals", to_json(rep.dual_maps)}, {"tensor", to_json(*t)}};
    r["input"] = input;
    return r;
}

// Hopf.

Json hopf_verdict(const Json& input, const Json& params) {
    auto r = header("hopf verdict", params);
    auto b = io::load_bialgebra(node(input, "bialgebra"));
    auto v = hopf::coinvariant_verdict(b, bound_or(params, 1u << 16));
    set_status(r, v.coinvariant_semiseparable.status);
    r["verdicts"] = {{"right_antipode", to_json(v.right_antipode_exists)},
                     {"anti_multiplicative", to_json(v.anti_mult)},
                     {"anti_comultiplicative", to_json(v.anti_comult)},
                     {"coinvariants_semiseparable", to_json(v.coinvariant_semiseparable)}};
    if (v.coinvariant_semiseparable.holds()) r["witness"] = {{"S", to_json(*v.S)}};
    r["input"] = input;
    return r;
}

Json hopf_grouplikes(const Json& input, const Json& params) {
    auto r = header("hopf grouplikes", params);
    auto c = io::load_coalgebra(node(input, "coalgebra"));
    try {
        auto gs = hopf::enumerate_grouplikes(c, bound_or(params, 1u << 16));
        set_status(r, Status::holds);
        r["count"] = gs.size();
        Json w = Json::array();
        for (const auto& g : gs) w.push_back(to_json(g));
        r["witness"] = {{"grouplikes", w}};
    } catch (const PreconditionError& e) {
        set_status(r, Status::indeterminate);
        r["detail"] = e.what();
    } catch (const BoundExceeded& e) {
        set_status(r, Status::indeterminate);
        r["detail"] = e.what();
    }
    r["input"] = input;
    return r;
}

Json hopf_coalgebra_map(const Json& input, const Json& params) {
    auto r = header("hopf coalgebra-map", params);
    io::LoadOptions o;
    o.check_maps = false;
    auto psi = io::load_coalgebra_map(node(input, "map"), o);
    set_status(r, hopf::coalgebra_map_verify(psi.matrix, psi.source, psi.target) ? Status::holds : Status::fails);
    r["input"] = input;
    return r;
}

}  // namespace

Json execute(const std::string& command, const Json& input, const Json& params) {
    static const std::map<std::string, Json (*)(const Json&, const Json&)> table{
        {"cat validate", cat_validate},       {"cat property", cat_property},
        {"cat decide", cat_decide},           {"cat idempotent", cat_idempotent},
        {"cat coidentifier", cat_coidentifier}, {"cat adjunction", cat_adjunction},
        {"cat triple", cat_triple},           {"ring-ext", ring_ext},
        {"coalg-map", coalg_map},             {"coring", coring},
        {"bimodule", bimodule},               {"hopf verdict", hopf_verdict},
        {"hopf grouplikes", hopf_grouplikes}, {"hopf coalgebra-map", hopf_coalgebra_map}};
    auto it = table.find(command);
    if (it == table.end()) throw InputError("unknown command '" + command + "'", "/command");
    return it->second(input, params);
}

}  // namespace semisep::cli
