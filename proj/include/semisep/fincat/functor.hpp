#pragma once

#include "semisep/fincat/category.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semisep::fincat {

/// Functor between finite categories given by object and morphism tables.
struct FinFunctor {
    CategoryPtr source;
    CategoryPtr target;
    std::vector<Obj> obj_map;
    std::vector<Mor> mor_map;

    Obj operator()(Obj x) const { return obj_map.at(x); }
    Mor on_morphism(Mor f) const { return mor_map.at(f); }

    static FinFunctor identity(const CategoryPtr& c);
    /// Builds from name tables; throws InputError on unknown names.
    static FinFunctor from_names(const CategoryPtr& source, const CategoryPtr& target,
                                 const std::map<std::string, std::string>& objects,
                                 const std::map<std::string, std::string>& morphisms);
};

bool operator==(const FinFunctor& a, const FinFunctor& b);

/// g∘f on the nose; throws when f's target differs from g's source.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
/// Sources/targets, identities and composition preserved. Empty when valid.
std::vector<std::string> validate(const FinFunctor& f);
FinFunctor dualize(const FinFunctor& f, const CategoryPtr& source_op, const CategoryPtr& target_op);
FinFunctor dualize(const FinFunctor& f);

/// Natural transformation from → to; components indexed by source objects.
struct NatTrans {
    FinFunctor from;
    FinFunctor to;
    std::vector<Mor> components;

    Mor operator[](Obj x) const { return components.at(x); }
    static NatTrans identity(const FinFunctor& f);
};

bool operator==(const NatTrans& a, const NatTrans& b);

/// Component typing and naturality squares. Empty when valid.
std::vector<std::string> validate(const NatTrans& a);
/// β∘α (vertical).
NatTrans vertical(const NatTrans& beta, const NatTrans& alpha);
/// Fα: components F(α_X).
NatTrans whisker_left(const FinFunctor& f, const NatTrans& alpha);
/// αG: components α_{GY}.
NatTrans whisker_right(const NatTrans& alpha, const FinFunctor& g);
bool is_natural_iso(const NatTrans& a);

/// Triangle identities εL∘Lη = Id_L and Rε∘ηR = Id_R for L ⊣ R with
/// unit η: Id → RL and counit ε: LR → Id. Also checks typing and naturality
/// of η and ε. Empty when valid.
std::vector<std::string> check_triangles(const FinFunctor& l, const FinFunctor& r, const NatTrans& unit,
                                         const NatTrans& counit);
/// Componentwise inverse of a natural isomorphism.
std::optional<NatTrans> inverse(const NatTrans& a);
NatTrans dualize(const NatTrans& a);

/// Enumerates natural transformations from → to in lexicographic order of
/// components (each hom-set in id-first order). `accept_component(x, m)` prunes
/// single components; `visit` returns false to stop the enumeration.
void enumerate_nat_trans(const FinFunctor& from, const FinFunctor& to,
                         const std::function<bool(Obj, Mor)>& accept_component,
                         const std::function<bool(const std::vector<Mor>&)>& visit);

/// Every functor c → d (object maps in lexicographic order, then morphism
/// tables). `visit` returns false to stop. Exponential; callers bound sizes.
void enumerate_functors(const CategoryPtr& c, const CategoryPtr& d,
                        const std::function<bool(const FinFunctor&)>& visit);

/// First natural transformation satisfying `pred`, if any.
std::optional<NatTrans> find_nat_trans(const FinFunctor& from, const FinFunctor& to,
                                       const std::function<bool(const NatTrans&)>& pred);

enum class FunctorProperty { faithful, full, fully_faithful, conservative, maschke, dual_maschke };

struct PropertyResult {
    bool holds = false;
    /// Names of the offending morphisms (a parallel pair, a missed morphism, ...).
    std::vector<std::string> counterexample;
};

PropertyResult functor_property(const FinFunctor& f, FunctorProperty prop);

std::string to_string(FunctorProperty p);
FunctorProperty parse_functor_property(const std::string& s);

}  // namespace semisep::fincat
