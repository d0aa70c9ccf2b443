#include "semisep/fincat/retraction.hpp"

#include "semisep/errors.hpp"

#include <algorithm>

namespace semisep::fincat {

namespace {

Obj nobj(const FinCategory& c) { return static_cast<Obj>(c.num_objects()); }
Mor nmor(const FinCategory& c) { return static_cast<Mor>(c.num_morphisms()); }

std::vector<int> positions_in_hom(const FinCategory& d) {
    std::vector<int> pos(d.num_morphisms(), -1);
    for (Obj a = 0; a < nobj(d); ++a)
        for (Obj b = 0; b < nobj(d); ++b) {
            const auto& hs = d.hom(a, b);
            for (std::size_t i = 0; i < hs.size(); ++i) pos[hs[i]] = static_cast<int>(i);
        }
    return pos;
}

void check_bound(const FinCategory& c, const SearchOptions& opts, const char* what) {
    if (c.num_morphisms() > opts.bound)
        throw BoundExceeded(std::string("search bound exceeded: ") + what + " has " +
                            std::to_string(c.num_morphisms()) + " morphisms (bound " + std::to_string(opts.bound) +
                            ")");
}

// Constraint search for binatural families Hom_D(F-,F-) → Hom_E(H-,H-) with a
// per-variable candidate list.
class BinaturalSearch {
public:
    BinaturalSearch(const FinFunctor& f, const FinFunctor& h) : F_(f), H_(h), C_(*f.source), D_(*f.target), E_(*h.target) {
        const Obj n = nobj(C_);
        pos_ = positions_in_hom(D_);
        offset_.assign(static_cast<std::size_t>(n) * n + 1, 0);
        for (Obj x = 0; x < n; ++x)
            for (Obj y = 0; y < n; ++y) {
                std::size_t idx = static_cast<std::size_t>(x) * n + y;
                offset_[idx + 1] = offset_[idx] + D_.hom(F_(x), F_(y)).size();
                for (Mor k : D_.hom(F_(x), F_(y))) vars_.push_back({x, y, k});
            }
        into_.assign(n, {});
        out_of_.assign(n, {});
        for (Mor m = 0; m < nmor(C_); ++m) {
            into_[C_.target(m)].push_back(m);
            out_of_[C_.source(m)].push_back(m);
        }
        candidates_.assign(vars_.size(), {});
        allowed_.assign(vars_.size(), std::vector<char>(E_.num_morphisms(), 0));
        value_.assign(vars_.size(), kNone);
    }

    std::size_t var_of(Obj x, Obj y, Mor k) const {
        return offset_[static_cast<std::size_t>(x) * nobj(C_) + y] + static_cast<std::size_t>(pos_[k]);
    }

    template <class Pred>
    void restrict_candidates(Pred allow) {
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            const auto& [x, y, k] = vars_[v];
            candidates_[v].clear();
            for (Mor p : E_.hom_id_first(H_(x), H_(y)))
                if (allow(x, y, k, p)) candidates_[v].push_back(p);
            std::fill(allowed_[v].begin(), allowed_[v].end(), 0);
            for (Mor p : candidates_[v]) allowed_[v][p] = 1;
        }
    }

    std::optional<HomFamily> run(std::size_t& nodes) {
        for (const auto& c : candidates_)
            if (c.empty()) return std::nullopt;
        if (!solve(0, nodes)) return std::nullopt;
        HomFamily out{F_, H_, std::vector<std::vector<Mor>>(offset_.size() - 1)};
        for (std::size_t idx = 0; idx + 1 < offset_.size(); ++idx)
            out.values[idx].assign(value_.begin() + static_cast<std::ptrdiff_t>(offset_[idx]),
                                   value_.begin() + static_cast<std::ptrdiff_t>(offset_[idx + 1]));
        return out;
    }

private:
    struct Var {
        Obj x, y;
        Mor k;
    };

    bool assign(std::size_t v, Mor p, std::vector<std::size_t>& trail) {
        std::vector<std::size_t> queue{v};
        value_[v] = p;
        trail.push_back(v);
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            const auto [x, y, k] = vars_[cur];
            Mor val = value_[cur];
            for (Mor hm : into_[x]) {
                Obj x2 = C_.source(hm);
                Mor k1 = D_.compose(k, F_.on_morphism(hm));
                Mor v1 = E_.compose(val, H_.on_morphism(hm));
                for (Mor lm : out_of_[y]) {
                    Obj y2 = C_.target(lm);
                    Mor k2 = D_.compose(F_.on_morphism(lm), k1);
                    Mor v2 = E_.compose(H_.on_morphism(lm), v1);
                    std::size_t t = var_of(x2, y2, k2);
                    if (value_[t] != kNone) {
                        if (value_[t] != v2) return false;
                        continue;
                    }
                    if (!allowed_[t][v2]) return false;
                    value_[t] = v2;
                    trail.push_back(t);
                    queue.push_back(t);
                }
            }
        }
        return true;
    }

    bool solve(std::size_t from, std::size_t& nodes) {
        std::size_t v = from;
        while (v < vars_.size() && value_[v] != kNone) ++v;
        if (v == vars_.size()) return true;
        for (Mor p : candidates_[v]) {
            ++nodes;
            std::vector<std::size_t> trail;
            if (assign(v, p, trail) && solve(v + 1, nodes)) return true;
            for (auto t : trail) value_[t] = kNone;
        }
        return false;
    }

    const FinFunctor& F_;
    const FinFunctor& H_;
    const FinCategory& C_;
    const FinCategory& D_;
    const FinCategory& E_;
    std::vector<int> pos_;
    std::vector<std::size_t> offset_;
    std::vector<Var> vars_;
    std::vector<std::vector<Mor>> into_, out_of_;
    std::vector<std::vector<Mor>> candidates_;
    std::vector<std::vector<char>> allowed_;
    std::vector<Mor> value_;
};

// For each (X,Y) and each k in Hom_D(FX,FY): the morphisms f: X → Y with Ff = k.
std::vector<std::vector<Mor>> preimages(const FinFunctor& f) {
    std::vector<std::vector<Mor>> out(f.target->num_morphisms());
    for (Mor m = 0; m < nmor(*f.source); ++m) out[f.on_morphism(m)].push_back(m);
    return out;
}

}  // namespace

Mor HomFamily::at(Obj x, Obj y, Mor k) const {
    const auto& d = *F.target;
    const auto& hs = d.hom(F(x), F(y));
    auto it = std::find(hs.begin(), hs.end(), k);
    if (it == hs.end()) throw PreconditionError("HomFamily::at: morphism outside Hom(FX,FY)");
    return values.at(static_cast<std::size_t>(x) * F.source->num_objects() + y).at(static_cast<std::size_t>(it - hs.begin()));
}

std::string to_string(Mode m) {
    switch (m) {
        case Mode::semiseparable: return "semiseparable";
        case Mode::separable: return "separable";
        case Mode::naturally_full: return "naturally_full";
    }
    return "";
}

Mode parse_mode(const std::string& s) {
    for (auto m : {Mode::semiseparable, Mode::separable, Mode::naturally_full})
        if (to_string(m) == s) return m;
    throw InputError("unknown mode '" + s + "'");
}

std::vector<std::string> validate(const HomFamily& p) {
    std::vector<std::string> out;
    const auto& c = *p.F.source;
    const auto& d = *p.F.target;
    const auto& e = *p.H.target;
    const Obj n = nobj(c);
    if (p.values.size() != static_cast<std::size_t>(n) * n) return {"family has the wrong number of hom tables"};
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y) {
            const auto& hs = d.hom(p.F(x), p.F(y));
            const auto& vals = p.values[static_cast<std::size_t>(x) * n + y];
            if (vals.size() != hs.size()) {
                out.push_back("table (" + c.object_name(x) + "," + c.object_name(y) + ") has the wrong size");
                continue;
            }
            for (Mor v : vals)
                if (v < 0 || v >= nmor(e) || e.source(v) != p.H(x) || e.target(v) != p.H(y))
                    out.push_back("ill-typed value in table (" + c.object_name(x) + "," + c.object_name(y) + ")");
        }
    if (!out.empty()) return out;
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y)
            for (Mor k : d.hom(p.F(x), p.F(y)))
                for (Obj x2 = 0; x2 < n; ++x2)
                    for (Mor h : c.hom(x2, x))
                        for (Obj y2 = 0; y2 < n; ++y2)
                            for (Mor l : c.hom(y, y2)) {
                                Mor lhs = p.at(x2, y2, d.compose(p.F.on_morphism(l), d.compose(k, p.F.on_morphism(h))));
                                Mor rhs = e.compose(p.H.on_morphism(l), e.compose(p.at(x, y, k), p.H.on_morphism(h)));
                                if (lhs != rhs)
                                    out.push_back("binaturality fails at (h=" + c.morphism_name(h) +
                                                  ", k=" + d.morphism_name(k) + ", l=" + c.morphism_name(l) + ")");
                            }
    return out;
}

std::vector<std::string> check_mode(const HomFamily& p, Mode mode) {
    std::vector<std::string> out;
    const auto& c = *p.F.source;
    const auto& d = *p.F.target;
    const Obj n = nobj(c);
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y) {
            if (mode == Mode::naturally_full) {
                for (Mor k : d.hom(p.F(x), p.F(y)))
                    if (p.F.on_morphism(p.at(x, y, k)) != k) out.push_back("F(P(k)) ≠ k at k=" + d.morphism_name(k));
                continue;
            }
            for (Mor f : c.hom(x, y)) {
                Mor ff = p.F.on_morphism(f);
                Mor back = p.at(x, y, ff);
                if (mode == Mode::separable && back != f) out.push_back("P(Ff) ≠ f at f=" + c.morphism_name(f));
                if (mode == Mode::semiseparable && p.F.on_morphism(back) != ff)
                    out.push_back("F(P(Ff)) ≠ Ff at f=" + c.morphism_name(f));
            }
        }
    return out;
}

RetractionResult decide_retraction(const FinFunctor& f, Mode mode, const SearchOptions& opts) {
    check_bound(*f.source, opts, "source category");
    check_bound(*f.target, opts, "target category");
    auto id = FinFunctor::identity(f.source);
    BinaturalSearch search(f, id);
    auto pre = preimages(f);
    search.restrict_candidates([&](Obj x, Obj y, Mor k, Mor p) {
        const auto& ps = pre[k];
        bool in_image = std::any_of(ps.begin(), ps.end(),
                                    [&](Mor g) { return f.source->source(g) == x && f.source->target(g) == y; });
        switch (mode) {
            case Mode::semiseparable: return !in_image || f.on_morphism(p) == k;
            case Mode::naturally_full: return f.on_morphism(p) == k;
            case Mode::separable:
                if (!in_image) return true;
                for (Mor g : ps)
                    if (f.source->source(g) == x && f.source->target(g) == y && g != p) return false;
                return true;
        }
        return false;
    });
    RetractionResult r;
    r.witness = search.run(r.nodes);
    if (r.witness && (!validate(*r.witness).empty() || !check_mode(*r.witness, mode).empty()))
        throw std::logic_error("decide_retraction produced an invalid witness");
    return r;
}

RetractionResult relative_separable(const FinFunctor& f, const FinFunctor& h, const SearchOptions& opts) {
    if (!(*f.source == *h.source)) throw PreconditionError("relative_separable: functors do not share a source");
    check_bound(*f.source, opts, "source category");
    check_bound(*f.target, opts, "target of F");
    check_bound(*h.target, opts, "target of H");
    BinaturalSearch search(f, h);
    auto pre = preimages(f);
    search.restrict_candidates([&](Obj x, Obj y, Mor k, Mor p) {
        for (Mor g : pre[k])
            if (f.source->source(g) == x && f.source->target(g) == y && h.on_morphism(g) != p) return false;
        return true;
    });
    RetractionResult r;
    r.witness = search.run(r.nodes);
    if (r.witness && !validate(*r.witness).empty()) throw std::logic_error("relative_separable produced an invalid witness");
    return r;
}

bool IdempotentNat::is_identity() const {
    for (std::size_t x = 0; x < components.size(); ++x)
        if (components[x] != category->identity(static_cast<Obj>(x))) return false;
    return true;
}

bool functor_inverts(const FinFunctor& f, const std::vector<Mor>& e) {
    for (Obj x = 0; x < static_cast<Obj>(e.size()); ++x)
        if (f.on_morphism(e[x]) != f.target->identity(f(x))) return false;
    return true;
}

namespace {

bool universal_property(const FinFunctor& f, const std::vector<Mor>& e) {
    const auto& c = *f.source;
    for (Obj x = 0; x < nobj(c); ++x)
        for (Obj y = 0; y < nobj(c); ++y) {
            const auto& hs = c.hom(x, y);
            for (Mor a : hs)
                for (Mor b : hs) {
                    bool same_image = f.on_morphism(a) == f.on_morphism(b);
                    bool same_class = c.compose(e[y], a) == c.compose(e[y], b);
                    if (same_image != same_class) return false;
                }
        }
    return true;
}

}  // namespace

IdempotentReport associated_idempotent(const FinFunctor& f, const HomFamily& p) {
    if (!validate(p).empty() || !check_mode(p, Mode::semiseparable).empty())
        throw PreconditionError("associated_idempotent: P is not a semiseparability witness");
    const auto& c = *f.source;
    IdempotentReport r;
    r.e.category = f.source;
    for (Obj x = 0; x < nobj(c); ++x) r.e.components.push_back(p.at(x, x, f.target->identity(f(x))));
    const auto& e = r.e.components;
    r.idempotent = true;
    for (Mor m : e)
        if (c.compose(m, m) != m) r.idempotent = false;
    r.natural = true;
    for (Mor m = 0; m < nmor(c); ++m)
        if (c.compose(m, e[c.source(m)]) != c.compose(e[c.target(m)], m)) r.natural = false;
    r.inverts_to_identity = functor_inverts(f, e);
    r.universal = universal_property(f, e);
    auto id = FinFunctor::identity(f.source);
    enumerate_nat_trans(
        id, id,
        [&](Obj x, Mor m) { return c.compose(m, m) == m && f.on_morphism(m) == f.target->identity(f(x)); },
        [&](const std::vector<Mor>& cand) {
            if (universal_property(f, cand)) ++r.qualifying_count;
            return true;
        });
    return r;
}

TransferResult retract_transfer(const FinFunctor& h, const FinFunctor& f, const NatTrans& phi, const NatTrans& psi,
                                const SearchOptions& opts) {
    if (!(phi.from == f) || !(phi.to == h) || !(psi.from == h) || !(psi.to == f))
        throw PreconditionError("retract_transfer: φ must be F → H and ψ must be H → F");
    if (!(vertical(phi, psi) == NatTrans::identity(h))) throw PreconditionError("retract_transfer: φ∘ψ ≠ Id_H");
    TransferResult out;
    auto ph = decide_retraction(h, Mode::semiseparable, opts);
    if (!ph.holds()) {
        out.reason = "H is not semiseparable";
        return out;
    }
    auto idem = associated_idempotent(h, *ph.witness);
    if (!functor_inverts(f, idem.e.components)) {
        out.reason = "Fe ≠ Id_F";
        return out;
    }
    const auto& c = *f.source;
    const auto& d = *f.target;
    const Obj n = nobj(c);
    HomFamily pf{f, FinFunctor::identity(f.source), std::vector<std::vector<Mor>>(static_cast<std::size_t>(n) * n)};
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y)
            for (Mor g : d.hom(f(x), f(y)))
                pf.values[static_cast<std::size_t>(x) * n + y].push_back(
                    ph.witness->at(x, y, d.compose(phi[y], d.compose(g, psi[x]))));
    if (!validate(pf).empty() || !check_mode(pf, Mode::semiseparable).empty())
        throw std::logic_error("retract_transfer: constructed family is not a witness");
    out.outcome = TransferOutcome::transferred;
    out.witness = std::move(pf);
    return out;
}

}  // namespace semisep::fincat
