#include "internal.hpp"

#include "semisep/adjunction/adjunction.hpp"
#include "semisep/coident/coidentifier.hpp"
#include "semisep/errors.hpp"
#include "semisep/hopf/hopf.hpp"
#include "semisep/sepcheck/verify.hpp"

namespace semisep::cli {

using io::Node;
using io::to_json;
using namespace detail;

namespace {

using sepcheck::verify::Kind;

Certificate cert(std::string law, bool holds, std::string detail = "") {
    return {std::move(law), holds, std::move(detail)};
}

Kind kind_of(Mode m) {
    return m == Mode::semiseparable ? Kind::semiseparable : m == Mode::separable ? Kind::separable : Kind::naturally_full;
}

Node in(const Json& input, const char* key) { return Node::from(input.at(key), std::string("input/") + key); }

void check_family(Certificates& cs, const HomFamily& p, Mode mode, const std::string& what) {
    auto bad = fincat::validate(p);
    cs.push_back(cert(what + " binatural", bad.empty(), bad.empty() ? "" : bad.front()));
    if (!bad.empty()) return;
    auto off = fincat::check_mode(p, mode);
    cs.push_back(cert(what + " meets the " + fincat::to_string(mode) + " condition", off.empty(),
                      off.empty() ? "" : off.front()));
}

bool same(const Json& a, const Json& b) { return io::dump(a) == io::dump(b); }

Certificates witness_checks(const std::string& command, const Json& input, const Json& params, const Node& w) {
    Certificates cs;
    if (command == "cat decide") {
        auto f = io::load_functor(in(input, "functor"));
        check_family(cs, family_from(w["P"], f), mode_of(params), "P");
    } else if (command == "cat idempotent") {
        auto f = io::load_functor(in(input, "functor"));
        const auto& c = *f.source;
        const auto& d = *f.target;
        auto p = family_from(w["P"], f);
        check_family(cs, p, Mode::semiseparable, "P");
        if (!all_hold(cs)) return cs;
        auto e = components_from(w["e"], c);
        bool from_p = true;
        for (std::size_t x = 0; x < e.size(); ++x) {
            auto fx = f(static_cast<fincat::Obj>(x));
            from_p = from_p && p.at(static_cast<fincat::Obj>(x), static_cast<fincat::Obj>(x), d.identity(fx)) == e[x];
        }
        cs.push_back(cert("e = P(id) componentwise", from_p));
        auto bad = coident::validate(fincat::IdempotentNat{f.source, e});
        cs.push_back(cert("e natural and idempotent", bad.empty()));
        cs.push_back(cert("Fe = Id", fincat::functor_inverts(f, e)));
        bool universal = true;
        const auto m = static_cast<fincat::Mor>(c.num_morphisms());
        for (fincat::Mor a = 0; a < m; ++a)
            for (fincat::Mor b = 0; b < m; ++b) {
                if (c.source(a) != c.source(b) || c.target(a) != c.target(b)) continue;
                auto eb = e[c.target(a)];
                universal = universal && ((f.on_morphism(a) == f.on_morphism(b)) == (c.compose(eb, a) == c.compose(eb, b)));
            }
        cs.push_back(cert("Ff = Fg iff e f = e g", universal));
    } else if (command == "cat coidentifier") {
        auto f = io::load_functor(in(input, "functor"));
        auto q = io::load_category(w["quotient"]);
        auto h = io::load_functor(w["H"]);
        auto fe = io::load_functor(w["Fe"]);
        cs.push_back(cert("H starts at the source of F", same(to_json(*h.source), to_json(*f.source))));
        cs.push_back(cert("H lands in the quotient", same(to_json(*h.target), to_json(*q))));
        cs.push_back(cert("Fe starts at the quotient", same(to_json(*fe.source), to_json(*q))));
        bool composite = false;
        try {
            composite = same(to_json(fincat::compose(fe, h)), to_json(f));
        } catch (const std::exception&) {
        }
        cs.push_back(cert("Fe H = F", composite));
        check_family(cs, family_from(w["H_witness"], h), Mode::naturally_full, "H witness");
        check_family(cs, family_from(w["Fe_witness"], fe), Mode::separable, "Fe witness");
    } else if (command == "cat adjunction") {
        auto f = io::load_functor(in(input, "left"));
        auto g = io::load_functor(in(input, "right"));
        auto a = adjunction_from(w, f, g);
        cs.push_back(cert("triangle identities", true));
        auto side = params.value("side", std::string("left")) == "right" ? adjunction::Side::right : adjunction::Side::left;
        auto nu = regularity_from(w[side == adjunction::Side::left ? "nu" : "gamma"], a, side);
        auto more = check_regularity(a, side, nu, mode_of(params));
        cs.insert(cs.end(), more.begin(), more.end());
    } else if (command == "cat triple") {
        auto f = io::load_functor(in(input, "F"));
        auto g = io::load_functor(in(input, "G"));
        auto h = io::load_functor(in(input, "H"));
        adjunction_from(w["left"], f, g);
        auto right = adjunction_from(w["right"], g, h);
        cs.push_back(cert("triangle identities", true));
        auto gamma = regularity_from(w["gamma"], right, adjunction::Side::right);
        auto more = check_regularity(right, adjunction::Side::right, gamma, mode_of(params));
        cs.insert(cs.end(), more.begin(), more.end());
    } else if (command == "ring-ext") {
        auto phi = io::load_algebra_map(in(input, "map"));
        auto e = w["E"].matrix(phi.source.field, phi.source.dim, phi.target.dim);
        cs = sepcheck::verify::ring_ext(phi, e, kind_of(mode_of(params)));
        if (w.has("z")) cs.push_back(cert("z = E(1)", e.apply(phi.target.unit) == w["z"].vector(phi.source.field)));
    } else if (command == "coalg-map") {
        auto psi = io::load_coalgebra_map(in(input, "map"));
        auto chi = w["chi"].matrix(psi.source.field, psi.source.dim, psi.target.dim);
        cs = sepcheck::verify::coalg_map(psi, chi, kind_of(mode_of(params)));
    } else if (command == "coring") {
        auto c = io::load_coring(in(input, "coring"));
        auto z = w["z"].vector(c.C.field(), c.C.dim);
        cs = sepcheck::verify::coring(c, z, kind_of(mode_of(params)));
    } else if (command == "bimodule") {
        auto m = io::load_bimodule(in(input, "bimodule"));
        auto fn = w["functionals"];
        std::vector<linalg::Matrix> fs;
        for (std::size_t i = 0; i < fn.size(); ++i) fs.push_back(fn[i].matrix(m.field(), m.right_algebra.dim, m.dim));
        auto t = w["tensor"].vector(m.field(), fs.size() * m.dim);
        cs = sepcheck::verify::bimodule(m, fs, t, mode_of(params) == Mode::separable);
    } else if (command == "hopf verdict") {
        auto b = io::load_bialgebra(in(input, "bialgebra"));
        auto s = w["S"].matrix(b.algebra.field, b.algebra.dim, b.algebra.dim);
        auto p = hopf::verify_antipode_properties(b, s);
        cs.push_back(cert("sum b1 S(b2) = eps(b) 1", p.right_antipode));
        cs.push_back(cert("S(ab) = S(b) S(a)", p.anti_mult));
        cs.push_back(cert("Delta S = (S x S) tau Delta", p.anti_comult));
    } else if (command == "hopf grouplikes") {
        auto c = io::load_coalgebra(in(input, "coalgebra"));
        auto gs = w["grouplikes"];
        std::vector<linalg::Vector> vs;
        for (std::size_t i = 0; i < gs.size(); ++i) vs.push_back(gs[i].vector(c.field, c.dim));
        cs.push_back(cert("every listed element is grouplike", hopf::grouplike_verify(c, vs).size() == vs.size()));
        bool distinct = true;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) distinct = distinct && !(vs[i] == vs[j]);
        cs.push_back(cert("listed elements are distinct", distinct));
    } else {
        throw InputError("no witness verifier for '" + command + "'", "/command");
    }
    return cs;
}

}  // namespace

Json verify_report(const Json& report) {
    if (!report.is_object() || !report.contains("command") || !report.contains("input") || !report.contains("status"))
        throw InputError("not a report (needs \"command\", \"status\" and \"input\")", "/");
    const auto command = report["command"].get<std::string>();
    const auto& input = report["input"];
    const Json params = report.value("parameters", Json::object());
    if (report["status"] == "holds" && report.contains("witness")) {
        try {
            return verification(witness_checks(command, input, params, Node::from(report["witness"], "witness")));
        } catch (const std::exception& e) {
            return {{"verified", false}, {"method", "witness substitution"}, {"detail", e.what()}};
        }
    }
    Json again;
    try {
        again = execute(command, input, params);
    } catch (const std::exception& e) {
        return {{"verified", false}, {"method", "recomputed"}, {"detail", e.what()}};
    }
    Json original = report;
    original.erase("verification");
    return {{"verified", same(again, original)}, {"method", "recomputed"}};
}

}  // namespace semisep::cli
