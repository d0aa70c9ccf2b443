#include "semisep/coident/coidentifier.hpp"

#include "semisep/errors.hpp"

#include <functional>
#include <map>

namespace semisep::coident {

using fincat::CategoryBuilder;
using fincat::FinCategory;
using fincat::Mode;

namespace {

Obj nobj(const FinCategory& c) { return static_cast<Obj>(c.num_objects()); }
Mor nmor(const FinCategory& c) { return static_cast<Mor>(c.num_morphisms()); }

void require_valid(const IdempotentNat& e) {
    auto v = validate(e);
    if (!v.empty()) throw PreconditionError("not a natural idempotent: " + v.front());
}

}  // namespace

std::vector<std::string> validate(const IdempotentNat& e) {
    std::vector<std::string> out;
    const auto& c = *e.category;
    if (e.components.size() != c.num_objects()) return {"wrong number of components"};
    for (Obj x = 0; x < nobj(c); ++x) {
        Mor ex = e.components[x];
        if (ex < 0 || ex >= nmor(c) || c.source(ex) != x || c.target(ex) != x) {
            out.push_back("component at " + c.object_name(x) + " is not an endomorphism");
            return out;
        }
        if (c.compose(ex, ex) != ex) out.push_back("e not idempotent at " + c.object_name(x));
    }
    for (Mor f = 0; f < nmor(c); ++f) {
        Obj a = c.source(f), b = c.target(f);
        if (c.compose(f, e.components[a]) != c.compose(e.components[b], f))
            out.push_back("e not natural at " + c.morphism_name(f));
    }
    return out;
}

Coidentifier build_coidentifier(const IdempotentNat& e) {
    require_valid(e);
    const auto& c = *e.category;
    const Mor m = nmor(c);
    const Obj n = nobj(c);

    std::vector<Mor> cls(m, fincat::kNone);
    std::vector<Mor> rep;
    for (Mor f = 0; f < m; ++f) {
        Mor key = c.compose(e.components[c.target(f)], f);
        for (Mor g : c.hom(c.source(f), c.target(f))) {
            if (g >= f) break;
            if (c.compose(e.components[c.target(g)], g) == key) {
                cls[f] = cls[g];
                break;
            }
        }
        if (cls[f] == fincat::kNone) {
            cls[f] = static_cast<Mor>(rep.size());
            rep.push_back(f);
        }
    }

    Coidentifier q;
    q.e = e;
    q.representative = rep;

    bool congruence = true;
    for (Mor g = 0; g < m; ++g)
        for (Mor f = 0; f < m; ++f) {
            if (c.source(g) != c.target(f)) continue;
            if (cls[c.compose(g, f)] != cls[c.compose(rep[cls[g]], rep[cls[f]])]) congruence = false;
        }
    q.certificates.push_back({"congruence", congruence, ""});
    if (!congruence) throw PreconditionError("relation is not a congruence");

    CategoryBuilder b;
    for (Obj x = 0; x < n; ++x) b.object(c.object_name(x));
    std::vector<bool> is_id(rep.size(), false);
    for (Obj x = 0; x < n; ++x) {
        Mor k = cls[c.identity(x)];
        is_id[k] = true;
        b.identity(c.object_name(x), c.morphism_name(rep[k]));
    }
    for (std::size_t k = 0; k < rep.size(); ++k)
        if (!is_id[k])
            b.morphism(c.morphism_name(rep[k]), c.object_name(c.source(rep[k])), c.object_name(c.target(rep[k])));
    for (Mor g : rep)
        for (Mor f : rep)
            if (c.source(g) == c.target(f))
                b.compose(c.morphism_name(g), c.morphism_name(f), c.morphism_name(rep[cls[c.compose(g, f)]]));
    q.quotient = b.build();

    const auto& qc = *q.quotient;
    q.H = FinFunctor{e.category, q.quotient, {}, {}};
    for (Obj x = 0; x < n; ++x) q.H.obj_map.push_back(x);
    for (Mor f = 0; f < m; ++f) q.H.mor_map.push_back(*qc.find_morphism(c.morphism_name(rep[cls[f]])));
    // quotient ids follow representative order; keep rep indexed by quotient id
    q.representative.assign(qc.num_morphisms(), fincat::kNone);
    for (Mor f : rep) q.representative[q.H.on_morphism(f)] = f;

    q.certificates.push_back({"H is a functor", fincat::validate(q.H).empty(), ""});

    q.witness = HomFamily{q.H, FinFunctor::identity(e.category), {}};
    q.witness.values.resize(static_cast<std::size_t>(n) * n);
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y)
            for (Mor k : qc.hom(x, y))
                q.witness.values[static_cast<std::size_t>(x) * n + y].push_back(
                    c.compose(e.components[y], q.representative[k]));
    bool natfull = fincat::validate(q.witness).empty() && fincat::check_mode(q.witness, Mode::naturally_full).empty();
    q.certificates.push_back({"H naturally full via e_B∘f", natfull, ""});
    bool recovered = false;
    if (natfull) {
        auto rep_e = fincat::associated_idempotent(q.H, q.witness);
        recovered = rep_e.ok() && rep_e.e.components == e.components;
    }
    q.certificates.push_back({"idempotent of H equals e", recovered, ""});
    return q;
}

FinFunctor induce_through(const Coidentifier& q, const FinFunctor& f) {
    if (!(*f.source == *q.base())) throw PreconditionError("functor source differs from the coidentified category");
    if (!fincat::functor_inverts(f, q.e.components)) throw PreconditionError("not liftable: Fe is not the identity");
    FinFunctor fe{q.quotient, f.target, f.obj_map, {}};
    for (Mor r : q.representative) fe.mor_map.push_back(f.on_morphism(r));
    if (!fincat::validate(fe).empty() || !(fincat::compose(fe, q.H) == f))
        throw std::logic_error("induced functor does not factor F");
    return fe;
}

FinFunctor induce_through(const Coidentifier& q, const FinFunctor& f, const FinFunctor& s, const FinFunctor& g) {
    if (!fincat::functor_property(s, fincat::FunctorProperty::faithful).holds)
        throw PreconditionError("S is not faithful");
    if (!(fincat::compose(s, f) == fincat::compose(g, q.H))) throw PreconditionError("square S∘F = G∘H does not commute");
    auto fe = induce_through(q, f);
    if (!(fincat::compose(s, fe) == g)) throw std::logic_error("induced functor does not satisfy S∘F_e = G");
    return fe;
}

Factorization factorize_semiseparable(const FinFunctor& f, const fincat::SearchOptions& opts) {
    auto r = fincat::decide_retraction(f, Mode::semiseparable, opts);
    if (!r.holds()) throw PreconditionError("functor is not semiseparable");
    auto idem = fincat::associated_idempotent(f, *r.witness);
    Factorization out{build_coidentifier(idem.e), {}, {}, {}};
    out.certificates.push_back({"associated idempotent", idem.ok(), ""});
    out.Fe = induce_through(out.coidentifier, f);
    out.certificates.push_back({"F = F_e∘H", fincat::compose(out.Fe, out.coidentifier.H) == f, ""});
    auto sep = fincat::decide_retraction(out.Fe, Mode::separable, opts);
    out.certificates.push_back({"F_e separable", sep.holds(), ""});
    if (sep.holds()) out.fe_witness = *sep.witness;
    return out;
}

std::vector<std::string> validate(const IdempotentNat& e, const SplitWitness& w) {
    std::vector<std::string> out;
    const auto& c = *e.category;
    const auto n = c.num_objects();
    if (w.through.size() != n || w.pi.size() != n || w.iota.size() != n) return {"wrong number of components"};
    for (Obj x = 0; x < nobj(c); ++x) {
        Obj y = w.through[x];
        Mor p = w.pi[x], i = w.iota[x];
        if (c.source(p) != x || c.target(p) != y || c.source(i) != y || c.target(i) != x) {
            out.push_back("splitting at " + c.object_name(x) + " is ill-typed");
            continue;
        }
        if (c.compose(i, p) != e.components[x]) out.push_back("ι∘π ≠ e at " + c.object_name(x));
        if (c.compose(p, i) != c.identity(y)) out.push_back("π∘ι ≠ id at " + c.object_name(x));
    }
    if (!out.empty()) return out;
    auto P = split_endofunctor(e, w);
    for (const auto& v : fincat::validate(P)) out.push_back("P: " + v);
    if (!out.empty()) return out;
    auto id = FinFunctor::identity(e.category);
    for (const auto& v : fincat::validate(NatTrans{id, P, w.pi})) out.push_back("π: " + v);
    for (const auto& v : fincat::validate(NatTrans{P, id, w.iota})) out.push_back("ι: " + v);
    return out;
}

FinFunctor split_endofunctor(const IdempotentNat& e, const SplitWitness& w) {
    const auto& c = *e.category;
    FinFunctor p{e.category, e.category, w.through, {}};
    for (Mor f = 0; f < nmor(c); ++f)
        p.mor_map.push_back(c.compose(w.pi[c.target(f)], c.compose(f, w.iota[c.source(f)])));
    return p;
}

std::optional<SplitWitness> split_idempotent(const IdempotentNat& e) {
    require_valid(e);
    const auto& c = *e.category;
    const Obj n = nobj(c);
    struct Choice {
        Obj y;
        Mor pi, iota;
    };
    std::vector<std::vector<Choice>> options(n);
    for (Obj x = 0; x < n; ++x) {
        for (Obj y = 0; y < n; ++y)
            for (Mor p : c.hom(x, y))
                for (Mor i : c.hom(y, x))
                    if (c.compose(i, p) == e.components[x] && c.compose(p, i) == c.identity(y))
                        options[x].push_back({y, p, i});
        if (options[x].empty()) return std::nullopt;
    }
    SplitWitness w{std::vector<Obj>(n), std::vector<Mor>(n), std::vector<Mor>(n)};
    std::optional<SplitWitness> found;
    std::function<void(Obj)> go = [&](Obj x) {
        if (found) return;
        if (x == n) {
            if (validate(e, w).empty()) found = w;
            return;
        }
        for (const auto& ch : options[x]) {
            w.through[x] = ch.y;
            w.pi[x] = ch.pi;
            w.iota[x] = ch.iota;
            go(x + 1);
            if (found) return;
        }
    };
    go(0);
    return found;
}

Bireflection bireflection_from_split(const Coidentifier& q, const SplitWitness& w) {
    auto v = validate(q.e, w);
    if (!v.empty()) throw PreconditionError("invalid splitting: " + v.front());
    const auto& c = *q.base();
    auto P = split_endofunctor(q.e, w);
    Bireflection out;
    out.Pe = induce_through(q, P);
    const auto& H = q.H;
    auto HPe = fincat::compose(H, out.Pe);
    auto PeH = fincat::compose(out.Pe, H);
    auto idC = FinFunctor::identity(q.base());
    auto idQ = FinFunctor::identity(q.quotient);

    out.left_unit = NatTrans{idQ, HPe, {}};
    out.left_counit = NatTrans{PeH, idC, w.iota};
    out.right_unit = NatTrans{idC, PeH, w.pi};
    out.right_counit = NatTrans{HPe, idQ, {}};
    for (Obj x = 0; x < nobj(c); ++x) {
        out.left_unit.components.push_back(H.on_morphism(w.pi[x]));
        out.right_counit.components.push_back(H.on_morphism(w.iota[x]));
    }

    auto left = fincat::check_triangles(out.Pe, H, out.left_unit, out.left_counit);
    auto right = fincat::check_triangles(H, out.Pe, out.right_unit, out.right_counit);
    out.certificates.push_back({"P_e ⊣ H triangle identities", left.empty(), left.empty() ? "" : left.front()});
    out.certificates.push_back({"H ⊣ P_e triangle identities", right.empty(), right.empty() ? "" : right.front()});
    out.certificates.push_back(
        {"P_e fully faithful", fincat::functor_property(out.Pe, fincat::FunctorProperty::fully_faithful).holds, ""});
    bool unit_iso = fincat::is_natural_iso(out.left_unit);
    out.certificates.push_back({"unit of P_e ⊣ H invertible", unit_iso, ""});
    bool coherent = true;
    for (Obj x = 0; x < nobj(c); ++x)
        if (c.compose(w.pi[x], w.iota[x]) != c.identity(w.through[x])) coherent = false;
    out.certificates.push_back({"coherence π∘ι = Id", coherent, ""});
    return out;
}

}  // namespace semisep::coident
