#include "semisep/fincat/category.hpp"

#include "semisep/errors.hpp"

#include <algorithm>
#include <set>

namespace semisep::fincat {

std::optional<Obj> FinCategory::find_object(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Mor> FinCategory::find_morphism(const std::string& name) const {
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end()) return std::nullopt;
    return it->second;
}

Mor FinCategory::compose(Mor g, Mor f) const {
    if (target(f) != source(g))
        throw PreconditionError("not composable: " + morphism_name(g) + "∘" + morphism_name(f));
    Mor h = composite_or_none(g, f);
    if (h == kNone) throw PreconditionError("missing composite " + morphism_name(g) + "∘" + morphism_name(f));
    return h;
}

std::vector<Mor> FinCategory::hom_id_first(Obj a, Obj b) const {
    std::vector<Mor> out = hom(a, b);
    if (a == b) {
        auto it = std::find(out.begin(), out.end(), identity(a));
        if (it != out.end()) std::rotate(out.begin(), it, it + 1);
    }
    return out;
}

bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.identities_ == b.identities_ &&
           a.comp_ == b.comp_;
}

Obj CategoryBuilder::object(const std::string& name) {
    objects_.push_back(name);
    return static_cast<Obj>(objects_.size() - 1);
}

Mor CategoryBuilder::morphism(const std::string& name, const std::string& source, const std::string& target) {
    morphisms_.emplace_back(name, source, target);
    return static_cast<Mor>(morphisms_.size() - 1);
}

Mor CategoryBuilder::identity(const std::string& object, const std::string& name) {
    identities_[object] = name;
    return morphism(name, object, object);
}

CategoryBuilder& CategoryBuilder::compose(const std::string& g, const std::string& f, const std::string& h) {
    comps_.emplace_back(g, f, h);
    return *this;
}

CategoryPtr CategoryBuilder::build_unchecked() const {
    auto c = std::make_shared<FinCategory>();
    for (const auto& o : objects_) {
        if (c->object_index_.count(o)) throw InputError("duplicate object '" + o + "'");
        c->object_index_[o] = static_cast<Obj>(c->objects_.size());
        c->objects_.push_back(o);
    }
    const std::size_t no = c->objects_.size();
    c->homs_.assign(no * no, {});
    for (const auto& [name, s, t] : morphisms_) {
        if (c->morphism_index_.count(name)) throw InputError("duplicate morphism '" + name + "'");
        auto si = c->find_object(s);
        auto ti = c->find_object(t);
        if (!si || !ti) throw InputError("morphism '" + name + "' has unknown endpoint");
        Mor id = static_cast<Mor>(c->morphisms_.size());
        c->morphism_index_[name] = id;
        c->morphisms_.push_back({name, *si, *ti});
        c->homs_[static_cast<std::size_t>(*si) * no + *ti].push_back(id);
    }
    c->identities_.assign(no, kNone);
    for (Obj x = 0; x < static_cast<Obj>(no); ++x) {
        auto it = identities_.find(c->objects_[x]);
        if (it == identities_.end()) throw InputError("object '" + c->objects_[x] + "' has no identity");
        auto m = c->find_morphism(it->second);
        if (!m || c->source(*m) != x || c->target(*m) != x)
            throw InputError("identity of '" + c->objects_[x] + "' is not an endomorphism of it");
        c->identities_[x] = *m;
    }
    for (const auto& [o, _] : identities_)
        if (!c->find_object(o)) throw InputError("identity for unknown object '" + o + "'");
    const std::size_t nm = c->morphisms_.size();
    c->comp_.assign(nm * nm, kNone);
    for (const auto& [g, f, h] : comps_) {
        auto gi = c->find_morphism(g), fi = c->find_morphism(f), hi = c->find_morphism(h);
        if (!gi || !fi || !hi) throw InputError("composite " + g + "∘" + f + " = " + h + " names an unknown morphism");
        if (c->target(*fi) != c->source(*gi)) throw InputError("composite " + g + "∘" + f + " of a non-composable pair");
        auto& slot = c->comp_[static_cast<std::size_t>(*gi) * nm + *fi];
        if (slot != kNone && slot != *hi) throw InputError("composite " + g + "∘" + f + " given twice");
        slot = *hi;
    }
    for (Mor f = 0; f < static_cast<Mor>(nm); ++f) {
        Mor ia = c->identities_[c->source(f)], ib = c->identities_[c->target(f)];
        auto& left = c->comp_[static_cast<std::size_t>(ib) * nm + f];
        if (left == kNone) left = f;
        auto& right = c->comp_[static_cast<std::size_t>(f) * nm + ia];
        if (right == kNone) right = f;
    }
    return c;
}

CategoryPtr CategoryBuilder::build() const {
    auto c = build_unchecked();
    auto v = validate(*c);
    if (!v.empty()) {
        std::string msg = "invalid category:";
        for (const auto& s : v) msg += " " + s + ";";
        throw InputError(msg);
    }
    return c;
}

std::vector<std::string> validate(const FinCategory& c) {
    std::vector<std::string> out;
    const Mor n = static_cast<Mor>(c.num_morphisms());
    for (Mor g = 0; g < n; ++g)
        for (Mor f = 0; f < n; ++f) {
            Mor h = c.composite_or_none(g, f);
            bool composable = c.target(f) == c.source(g);
            if (!composable) {
                if (h != kNone) out.push_back("composite defined on non-composable pair " + c.morphism_name(g) + "∘" + c.morphism_name(f));
                continue;
            }
            if (h == kNone) {
                out.push_back("missing composite " + c.morphism_name(g) + "∘" + c.morphism_name(f));
                continue;
            }
            if (c.source(h) != c.source(f) || c.target(h) != c.target(g))
                out.push_back("ill-typed composite " + c.morphism_name(g) + "∘" + c.morphism_name(f));
        }
    for (Obj x = 0; x < static_cast<Obj>(c.num_objects()); ++x) {
        Mor i = c.identity(x);
        for (Mor f = 0; f < n; ++f) {
            if (c.target(f) == x && c.composite_or_none(i, f) != f)
                out.push_back("left identity law fails at " + c.morphism_name(f));
            if (c.source(f) == x && c.composite_or_none(f, i) != f)
                out.push_back("right identity law fails at " + c.morphism_name(f));
        }
    }
    if (!out.empty()) return out;
    for (Mor f = 0; f < n; ++f)
        for (Mor g = 0; g < n; ++g) {
            if (c.target(f) != c.source(g)) continue;
            Mor gf = c.composite_or_none(g, f);
            for (Mor h = 0; h < n; ++h) {
                if (c.target(g) != c.source(h)) continue;
                if (c.composite_or_none(h, gf) != c.composite_or_none(c.composite_or_none(h, g), f))
                    out.push_back("associativity fails at (" + c.morphism_name(h) + "," + c.morphism_name(g) + "," +
                                  c.morphism_name(f) + ")");
            }
        }
    return out;
}

CategoryPtr dualize(const FinCategory& c) {
    CategoryBuilder b;
    for (Obj x = 0; x < static_cast<Obj>(c.num_objects()); ++x) b.object(c.object_name(x));
    for (Mor f = 0; f < static_cast<Mor>(c.num_morphisms()); ++f) {
        if (c.is_identity(f)) b.identity(c.object_name(c.source(f)), c.morphism_name(f));
        else b.morphism(c.morphism_name(f), c.object_name(c.target(f)), c.object_name(c.source(f)));
    }
    for (Mor g = 0; g < static_cast<Mor>(c.num_morphisms()); ++g)
        for (Mor f = 0; f < static_cast<Mor>(c.num_morphisms()); ++f) {
            Mor h = c.composite_or_none(f, g);
            if (h != kNone) b.compose(c.morphism_name(g), c.morphism_name(f), c.morphism_name(h));
        }
    return b.build_unchecked();
}

CategoryPtr rename_objects(const FinCategory& c, const std::map<std::string, std::string>& rename) {
    auto nm = [&](Obj x) {
        auto it = rename.find(c.object_name(x));
        return it == rename.end() ? c.object_name(x) : it->second;
    };
    CategoryBuilder b;
    for (Obj x = 0; x < static_cast<Obj>(c.num_objects()); ++x) b.object(nm(x));
    for (Mor f = 0; f < static_cast<Mor>(c.num_morphisms()); ++f) {
        if (c.is_identity(f)) b.identity(nm(c.source(f)), c.morphism_name(f));
        else b.morphism(c.morphism_name(f), nm(c.source(f)), nm(c.target(f)));
    }
    for (Mor g = 0; g < static_cast<Mor>(c.num_morphisms()); ++g)
        for (Mor f = 0; f < static_cast<Mor>(c.num_morphisms()); ++f) {
            Mor h = c.composite_or_none(g, f);
            if (h != kNone) b.compose(c.morphism_name(g), c.morphism_name(f), c.morphism_name(h));
        }
    return b.build_unchecked();
}

namespace {

bool is_constant(const FinCategory& c, Mor k) {
    Obj x = c.source(k);
    for (Obj z = 0; z < static_cast<Obj>(c.num_objects()); ++z) {
        const auto& hs = c.hom(z, x);
        for (Mor g : hs)
            for (Mor h : hs)
                if (c.compose(k, g) != c.compose(k, h)) return false;
    }
    return true;
}

}  // namespace

ClassResult morphism_class(const FinCategory& c, Mor f, MorphismClass cls) {
    if (f < 0 || f >= static_cast<Mor>(c.num_morphisms())) throw InputError("unknown morphism id");
    Obj a = c.source(f), b = c.target(f);
    ClassResult r;
    switch (cls) {
        case MorphismClass::split_mono:
            for (Mor g : c.hom_id_first(b, a))
                if (c.compose(g, f) == c.identity(a)) return {true, {g}};
            return r;
        case MorphismClass::split_epi:
            for (Mor g : c.hom_id_first(b, a))
                if (c.compose(f, g) == c.identity(b)) return {true, {g}};
            return r;
        case MorphismClass::iso:
            for (Mor g : c.hom_id_first(b, a))
                if (c.compose(g, f) == c.identity(a) && c.compose(f, g) == c.identity(b)) return {true, {g}};
            return r;
        case MorphismClass::constant:
            r.holds = is_constant(c, f);
            return r;
        case MorphismClass::idempotent:
            r.holds = a == b && c.compose(f, f) == f;
            return r;
        case MorphismClass::split_idempotent:
            if (a != b || c.compose(f, f) != f) return r;
            for (Obj y = 0; y < static_cast<Obj>(c.num_objects()); ++y)
                for (Mor pi : c.hom(a, y))
                    for (Mor iota : c.hom(y, a))
                        if (c.compose(iota, pi) == f && c.compose(pi, iota) == c.identity(y)) return {true, {pi, iota}};
            return r;
    }
    return r;
}

ConstantGeneratedResult constant_generated(const FinCategory& c) {
    const Obj no = static_cast<Obj>(c.num_objects());
    std::vector<Mor> constants;
    for (Mor k = 0; k < static_cast<Mor>(c.num_morphisms()); ++k)
        if (is_constant(c, k)) constants.push_back(k);
    for (Obj x = 0; x < no; ++x)
        for (Obj y = 0; y < no; ++y) {
            const auto& hs = c.hom(x, y);
            for (std::size_t i = 0; i < hs.size(); ++i)
                for (std::size_t j = i + 1; j < hs.size(); ++j) {
                    bool separated = false;
                    for (Mor k : constants) {
                        if (c.target(k) != x) continue;
                        if (c.compose(hs[i], k) != c.compose(hs[j], k)) {
                            separated = true;
                            break;
                        }
                    }
                    if (!separated) return {false, std::make_pair(hs[i], hs[j])};
                }
        }
    return {true, std::nullopt};
}

}  // namespace semisep::fincat
