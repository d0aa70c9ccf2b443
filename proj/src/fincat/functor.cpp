#include "semisep/fincat/functor.hpp"

#include "semisep/errors.hpp"

#include <set>

namespace semisep::fincat {

namespace {

bool same_category(const CategoryPtr& a, const CategoryPtr& b) { return a == b || (a && b && *a == *b); }

Obj nobj(const FinCategory& c) { return static_cast<Obj>(c.num_objects()); }
Mor nmor(const FinCategory& c) { return static_cast<Mor>(c.num_morphisms()); }

}  // namespace

FinFunctor FinFunctor::identity(const CategoryPtr& c) {
    FinFunctor f{c, c, {}, {}};
    for (Obj x = 0; x < nobj(*c); ++x) f.obj_map.push_back(x);
    for (Mor m = 0; m < nmor(*c); ++m) f.mor_map.push_back(m);
    return f;
}

FinFunctor FinFunctor::from_names(const CategoryPtr& source, const CategoryPtr& target,
                                  const std::map<std::string, std::string>& objects,
                                  const std::map<std::string, std::string>& morphisms) {
    FinFunctor f{source, target, std::vector<Obj>(source->num_objects(), kNone),
                 std::vector<Mor>(source->num_morphisms(), kNone)};
    for (const auto& [a, b] : objects) {
        auto x = source->find_object(a);
        auto y = target->find_object(b);
        if (!x) throw InputError("unknown source object '" + a + "'", "/objects");
        if (!y) throw InputError("unknown target object '" + b + "'", "/objects/" + a);
        f.obj_map[*x] = *y;
    }
    for (const auto& [a, b] : morphisms) {
        auto x = source->find_morphism(a);
        auto y = target->find_morphism(b);
        if (!x) throw InputError("unknown source morphism '" + a + "'", "/morphisms");
        if (!y) throw InputError("unknown target morphism '" + b + "'", "/morphisms/" + a);
        f.mor_map[*x] = *y;
    }
    // Identities map to identities unless stated otherwise.
    for (Obj x = 0; x < nobj(*source); ++x) {
        if (f.obj_map[x] == kNone) throw InputError("object '" + source->object_name(x) + "' is not mapped", "/objects");
        Mor i = source->identity(x);
        if (f.mor_map[i] == kNone) f.mor_map[i] = target->identity(f.obj_map[x]);
    }
    for (Mor m = 0; m < nmor(*source); ++m)
        if (f.mor_map[m] == kNone)
            throw InputError("morphism '" + source->morphism_name(m) + "' is not mapped", "/morphisms");
    return f;
}

bool operator==(const FinFunctor& a, const FinFunctor& b) {
    return same_category(a.source, b.source) && same_category(a.target, b.target) && a.obj_map == b.obj_map &&
           a.mor_map == b.mor_map;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
    if (!same_category(f.target, g.source)) throw PreconditionError("compose: functors are not composable");
    FinFunctor h{f.source, g.target, {}, {}};
    for (Obj x : f.obj_map) h.obj_map.push_back(g.obj_map.at(x));
    for (Mor m : f.mor_map) h.mor_map.push_back(g.mor_map.at(m));
    return h;
}

std::vector<std::string> validate(const FinFunctor& f) {
    std::vector<std::string> out;
    const auto& c = *f.source;
    const auto& d = *f.target;
    if (f.obj_map.size() != c.num_objects() || f.mor_map.size() != c.num_morphisms()) {
        out.push_back("functor tables have the wrong size");
        return out;
    }
    for (Obj x : f.obj_map)
        if (x < 0 || x >= nobj(d)) out.push_back("object image out of range");
    for (Mor m : f.mor_map)
        if (m < 0 || m >= nmor(d)) out.push_back("morphism image out of range");
    if (!out.empty()) return out;
    for (Mor m = 0; m < nmor(c); ++m) {
        Mor fm = f.mor_map[m];
        if (d.source(fm) != f(c.source(m)) || d.target(fm) != f(c.target(m)))
            out.push_back("endpoints not preserved at " + c.morphism_name(m));
    }
    for (Obj x = 0; x < nobj(c); ++x)
        if (f.mor_map[c.identity(x)] != d.identity(f(x)))
            out.push_back("identity not preserved at " + c.object_name(x));
    if (!out.empty()) return out;
    for (Mor g = 0; g < nmor(c); ++g)
        for (Mor h = 0; h < nmor(c); ++h) {
            if (c.target(h) != c.source(g)) continue;
            if (f.mor_map[c.compose(g, h)] != d.compose(f.mor_map[g], f.mor_map[h]))
                out.push_back("composition not preserved at " + c.morphism_name(g) + "∘" + c.morphism_name(h));
        }
    return out;
}

FinFunctor dualize(const FinFunctor& f, const CategoryPtr& source_op, const CategoryPtr& target_op) {
    return FinFunctor{source_op, target_op, f.obj_map, f.mor_map};
}

FinFunctor dualize(const FinFunctor& f) {
    auto s = dualize(*f.source);
    auto t = f.source == f.target ? s : dualize(*f.target);
    return dualize(f, s, t);
}

NatTrans NatTrans::identity(const FinFunctor& f) {
    NatTrans a{f, f, {}};
    for (Obj x = 0; x < nobj(*f.source); ++x) a.components.push_back(f.target->identity(f(x)));
    return a;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
    return a.from == b.from && a.to == b.to && a.components == b.components;
}

std::vector<std::string> validate(const NatTrans& a) {
    std::vector<std::string> out;
    if (!same_category(a.from.source, a.to.source) || !same_category(a.from.target, a.to.target)) {
        out.push_back("functors do not share source and target");
        return out;
    }
    const auto& c = *a.from.source;
    const auto& d = *a.from.target;
    if (a.components.size() != c.num_objects()) {
        out.push_back("wrong number of components");
        return out;
    }
    for (Obj x = 0; x < nobj(c); ++x) {
        Mor m = a.components[x];
        if (m < 0 || m >= nmor(d) || d.source(m) != a.from(x) || d.target(m) != a.to(x))
            out.push_back("component at " + c.object_name(x) + " has the wrong type");
    }
    if (!out.empty()) return out;
    for (Mor f = 0; f < nmor(c); ++f) {
        Obj x = c.source(f), y = c.target(f);
        if (d.compose(a.to.on_morphism(f), a.components[x]) != d.compose(a.components[y], a.from.on_morphism(f)))
            out.push_back("naturality fails at " + c.morphism_name(f));
    }
    return out;
}

NatTrans vertical(const NatTrans& beta, const NatTrans& alpha) {
    if (!(alpha.to == beta.from)) throw PreconditionError("vertical: transformations are not composable");
    NatTrans r{alpha.from, beta.to, {}};
    const auto& d = *alpha.from.target;
    for (std::size_t x = 0; x < alpha.components.size(); ++x)
        r.components.push_back(d.compose(beta.components[x], alpha.components[x]));
    return r;
}

NatTrans whisker_left(const FinFunctor& f, const NatTrans& alpha) {
    NatTrans r{compose(f, alpha.from), compose(f, alpha.to), {}};
    for (Mor m : alpha.components) r.components.push_back(f.on_morphism(m));
    return r;
}

NatTrans whisker_right(const NatTrans& alpha, const FinFunctor& g) {
    NatTrans r{compose(alpha.from, g), compose(alpha.to, g), {}};
    for (Obj y = 0; y < nobj(*g.source); ++y) r.components.push_back(alpha.components.at(g(y)));
    return r;
}

std::vector<std::string> check_triangles(const FinFunctor& l, const FinFunctor& r, const NatTrans& unit,
                                         const NatTrans& counit) {
    std::vector<std::string> out;
    if (!same_category(l.source, r.target) || !same_category(l.target, r.source)) {
        out.push_back("functors are not opposed");
        return out;
    }
    if (!(unit.from == FinFunctor::identity(l.source)) || !(unit.to == compose(r, l)))
        out.push_back("unit has the wrong type");
    if (!(counit.from == compose(l, r)) || !(counit.to == FinFunctor::identity(l.target)))
        out.push_back("counit has the wrong type");
    if (!out.empty()) return out;
    for (const auto& v : validate(unit)) out.push_back("unit: " + v);
    for (const auto& v : validate(counit)) out.push_back("counit: " + v);
    const auto& c = *l.source;
    const auto& d = *l.target;
    for (Obj x = 0; x < nobj(c); ++x)
        if (d.compose(counit[l(x)], l.on_morphism(unit[x])) != d.identity(l(x)))
            out.push_back("triangle εL∘Lη fails at " + c.object_name(x));
    for (Obj y = 0; y < nobj(d); ++y)
        if (c.compose(r.on_morphism(counit[y]), unit[r(y)]) != c.identity(r(y)))
            out.push_back("triangle Rε∘ηR fails at " + d.object_name(y));
    return out;
}

bool is_natural_iso(const NatTrans& a) {
    const auto& d = *a.from.target;
    for (Mor m : a.components)
        if (!morphism_class(d, m, MorphismClass::iso).holds) return false;
    return true;
}

std::optional<NatTrans> inverse(const NatTrans& a) {
    const auto& d = *a.from.target;
    NatTrans r{a.to, a.from, {}};
    for (Mor m : a.components) {
        auto c = morphism_class(d, m, MorphismClass::iso);
        if (!c.holds) return std::nullopt;
        r.components.push_back(c.witness[0]);
    }
    return r;
}

NatTrans dualize(const NatTrans& a) {
    // α: F → G becomes αᵒᵖ: Gᵒᵖ → Fᵒᵖ with the same components.
    auto s = dualize(*a.from.source);
    auto t = a.from.source == a.from.target ? s : dualize(*a.from.target);
    return NatTrans{dualize(a.to, s, t), dualize(a.from, s, t), a.components};
}

void enumerate_nat_trans(const FinFunctor& from, const FinFunctor& to,
                         const std::function<bool(Obj, Mor)>& accept_component,
                         const std::function<bool(const std::vector<Mor>&)>& visit) {
    const auto& c = *from.source;
    const auto& d = *from.target;
    const Obj n = nobj(c);
    std::vector<Mor> comp(n, kNone);
    std::vector<std::vector<Mor>> candidates(n);
    for (Obj x = 0; x < n; ++x)
        for (Mor m : d.hom_id_first(from(x), to(x)))
            if (!accept_component || accept_component(x, m)) candidates[x].push_back(m);

    auto square_ok = [&](Mor f) {
        Obj x = c.source(f), y = c.target(f);
        return d.compose(to.on_morphism(f), comp[x]) == d.compose(comp[y], from.on_morphism(f));
    };
    bool stop = false;
    std::function<void(Obj)> rec = [&](Obj x) {
        if (stop) return;
        if (x == n) {
            if (!visit(comp)) stop = true;
            return;
        }
        for (Mor m : candidates[x]) {
            comp[x] = m;
            bool ok = true;
            for (Obj y = 0; y <= x && ok; ++y) {
                for (Mor f : c.hom(y, x))
                    if (!square_ok(f)) { ok = false; break; }
                if (!ok || y == x) continue;
                for (Mor f : c.hom(x, y))
                    if (!square_ok(f)) { ok = false; break; }
            }
            if (ok) rec(x + 1);
            if (stop) break;
        }
        comp[x] = kNone;
    };
    rec(0);
}

void enumerate_functors(const CategoryPtr& c, const CategoryPtr& d,
                        const std::function<bool(const FinFunctor&)>& visit) {
    const Obj n = nobj(*c);
    const Obj nd = nobj(*d);
    const Mor m = nmor(*c);
    if (n > 0 && nd == 0) return;
    FinFunctor f{c, d, std::vector<Obj>(n, 0), std::vector<Mor>(m, kNone)};
    bool stop = false;
    // composites whose factors are both assigned once morphism k is set
    auto consistent = [&](Mor k) {
        for (Mor g = 0; g <= k; ++g) {
            if (c->target(k) == c->source(g)) {
                Mor h = c->compose(g, k);
                if (h <= k && d->compose(f.mor_map[g], f.mor_map[k]) != f.mor_map[h]) return false;
            }
            if (g != k && c->target(g) == c->source(k)) {
                Mor h = c->compose(k, g);
                if (h <= k && d->compose(f.mor_map[k], f.mor_map[g]) != f.mor_map[h]) return false;
            }
        }
        return true;
    };
    std::function<void(Mor)> mors = [&](Mor k) {
        if (stop) return;
        if (k == m) {
            // composites that land above both factors were deferred
            for (Mor g = 0; g < m; ++g)
                for (Mor h = 0; h < m; ++h)
                    if (c->target(h) == c->source(g) &&
                        d->compose(f.mor_map[g], f.mor_map[h]) != f.mor_map[c->compose(g, h)])
                        return;
            if (!visit(f)) stop = true;
            return;
        }
        Obj a = f(c->source(k)), b = f(c->target(k));
        if (c->is_identity(k)) {
            f.mor_map[k] = d->identity(a);
            if (consistent(k)) mors(k + 1);
            return;
        }
        for (Mor cand : d->hom(a, b)) {
            f.mor_map[k] = cand;
            if (consistent(k)) mors(k + 1);
            if (stop) return;
        }
    };
    std::function<void(Obj)> objs = [&](Obj x) {
        if (stop) return;
        if (x == n) {
            mors(0);
            return;
        }
        for (Obj y = 0; y < nd && !stop; ++y) {
            f.obj_map[x] = y;
            objs(x + 1);
        }
    };
    objs(0);
}

std::optional<NatTrans> find_nat_trans(const FinFunctor& from, const FinFunctor& to,
                                       const std::function<bool(const NatTrans&)>& pred) {
    std::optional<NatTrans> found;
    enumerate_nat_trans(from, to, nullptr, [&](const std::vector<Mor>& comp) {
        NatTrans a{from, to, comp};
        if (pred && !pred(a)) return true;
        found = std::move(a);
        return false;
    });
    return found;
}

std::vector<std::vector<Mor>> nat_endo_monoid(const FinCategory& c) {
    // A shared_ptr that does not own c; the enumeration only reads it.
    CategoryPtr p(std::shared_ptr<const FinCategory>{}, &c);
    auto id = FinFunctor::identity(p);
    std::vector<std::vector<Mor>> out;
    enumerate_nat_trans(id, id, nullptr, [&](const std::vector<Mor>& comp) {
        out.push_back(comp);
        return true;
    });
    return out;
}

PropertyResult functor_property(const FinFunctor& f, FunctorProperty prop) {
    const auto& c = *f.source;
    const auto& d = *f.target;
    const Obj n = nobj(c);
    switch (prop) {
        case FunctorProperty::faithful:
            for (Obj x = 0; x < n; ++x)
                for (Obj y = 0; y < n; ++y) {
                    const auto& hs = c.hom(x, y);
                    for (std::size_t i = 0; i < hs.size(); ++i)
                        for (std::size_t j = i + 1; j < hs.size(); ++j)
                            if (f.on_morphism(hs[i]) == f.on_morphism(hs[j]))
                                return {false, {c.morphism_name(hs[i]), c.morphism_name(hs[j])}};
                }
            return {true, {}};
        case FunctorProperty::full:
            for (Obj x = 0; x < n; ++x)
                for (Obj y = 0; y < n; ++y) {
                    std::set<Mor> image;
                    for (Mor m : c.hom(x, y)) image.insert(f.on_morphism(m));
                    for (Mor k : d.hom(f(x), f(y)))
                        if (!image.count(k)) return {false, {c.object_name(x), c.object_name(y), d.morphism_name(k)}};
                }
            return {true, {}};
        case FunctorProperty::fully_faithful: {
            auto a = functor_property(f, FunctorProperty::faithful);
            if (!a.holds) return a;
            return functor_property(f, FunctorProperty::full);
        }
        case FunctorProperty::conservative:
        case FunctorProperty::maschke:
        case FunctorProperty::dual_maschke: {
            MorphismClass cls = prop == FunctorProperty::conservative ? MorphismClass::iso
                                : prop == FunctorProperty::maschke    ? MorphismClass::split_mono
                                                                      : MorphismClass::split_epi;
            for (Mor m = 0; m < nmor(c); ++m)
                if (morphism_class(d, f.on_morphism(m), cls).holds && !morphism_class(c, m, cls).holds)
                    return {false, {c.morphism_name(m)}};
            return {true, {}};
        }
    }
    return {};
}

std::string to_string(FunctorProperty p) {
    switch (p) {
        case FunctorProperty::faithful: return "faithful";
        case FunctorProperty::full: return "full";
        case FunctorProperty::fully_faithful: return "fully_faithful";
        case FunctorProperty::conservative: return "conservative";
        case FunctorProperty::maschke: return "maschke";
        case FunctorProperty::dual_maschke: return "dual_maschke";
    }
    return "";
}

FunctorProperty parse_functor_property(const std::string& s) {
    for (auto p : {FunctorProperty::faithful, FunctorProperty::full, FunctorProperty::fully_faithful,
                   FunctorProperty::conservative, FunctorProperty::maschke, FunctorProperty::dual_maschke})
        if (to_string(p) == s) return p;
    throw InputError("unknown functor property '" + s + "'");
}

}  // namespace semisep::fincat
