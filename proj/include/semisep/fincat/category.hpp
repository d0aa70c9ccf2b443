#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace semisep::fincat {

using Obj = int;
using Mor = int;
inline constexpr Mor kNone = -1;

/// A finite category given by a composition table. Objects and morphisms are
/// indexed in declaration order; names are unique.
class FinCategory {
public:
    std::size_t num_objects() const noexcept { return objects_.size(); }
    std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

    const std::string& object_name(Obj x) const { return objects_.at(x); }
    const std::string& morphism_name(Mor f) const { return morphisms_.at(f).name; }
    std::optional<Obj> find_object(const std::string& name) const;
    std::optional<Mor> find_morphism(const std::string& name) const;

    Obj source(Mor f) const { return morphisms_.at(f).source; }
    Obj target(Mor f) const { return morphisms_.at(f).target; }
    Mor identity(Obj x) const { return identities_.at(x); }
    bool is_identity(Mor f) const { return identities_.at(source(f)) == f; }

    /// g∘f; throws when the pair is not composable or the table has a hole.
    Mor compose(Mor g, Mor f) const;
    /// Raw table entry, kNone if absent.
    Mor composite_or_none(Mor g, Mor f) const { return comp_.at(static_cast<std::size_t>(g) * morphisms_.size() + f); }

    /// Hom(a,b) in declaration order.
    const std::vector<Mor>& hom(Obj a, Obj b) const { return homs_.at(static_cast<std::size_t>(a) * objects_.size() + b); }
    /// Hom(a,b) with the identity (if any) moved to the front.
    std::vector<Mor> hom_id_first(Obj a, Obj b) const;

    friend bool operator==(const FinCategory& a, const FinCategory& b);

private:
    friend class CategoryBuilder;
    struct Morphism {
        std::string name;
        Obj source;
        Obj target;
        friend bool operator==(const Morphism&, const Morphism&) = default;
    };
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<Mor> identities_;
    std::vector<Mor> comp_;
    std::vector<std::vector<Mor>> homs_;
    std::map<std::string, Obj> object_index_;
    std::map<std::string, Mor> morphism_index_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

/// Incremental construction. Composites with an identity are filled in
/// automatically; every other composable pair must be supplied.
class CategoryBuilder {
public:
    Obj object(const std::string& name);
    Mor morphism(const std::string& name, const std::string& source, const std::string& target);
    Mor identity(const std::string& object, const std::string& name);
    /// Records g∘f = h.
    CategoryBuilder& compose(const std::string& g, const std::string& f, const std::string& h);

    /// Builds and validates; throws InputError listing the violations.
    CategoryPtr build() const;
    /// Builds without law checks; holes in the table stay kNone. Unknown or
    /// duplicate names and missing identities still throw.
    CategoryPtr build_unchecked() const;

private:
    std::vector<std::string> objects_;
    std::vector<std::tuple<std::string, std::string, std::string>> morphisms_;
    std::map<std::string, std::string> identities_;
    std::vector<std::tuple<std::string, std::string, std::string>> comps_;
};

/// Identity laws, associativity, typing of composites and holes. Empty when valid.
std::vector<std::string> validate(const FinCategory& c);

/// Opposite category: same names, sources and targets swapped, g∘ᵒᵖf = f∘g.
CategoryPtr dualize(const FinCategory& c);

/// Category with every morphism of `c` renamed/reindexed identically; objects
/// renamed by `rename` (used for isomorphic copies).
CategoryPtr rename_objects(const FinCategory& c, const std::map<std::string, std::string>& rename);

enum class MorphismClass { split_mono, split_epi, iso, constant, idempotent, split_idempotent };

struct ClassResult {
    bool holds = false;
    /// split_mono: retraction; split_epi: section; iso: inverse;
    /// split_idempotent: {π, ι} through some object.
    std::vector<Mor> witness;
};

ClassResult morphism_class(const FinCategory& c, Mor f, MorphismClass cls);

/// Every natural transformation Id → Id, as component vectors, in
/// lexicographic order of components (declaration order per object).
std::vector<std::vector<Mor>> nat_endo_monoid(const FinCategory& c);

struct ConstantGeneratedResult {
    bool holds = false;
    /// On failure: a parallel pair no constant separates.
    std::optional<std::pair<Mor, Mor>> counterexample;
};

ConstantGeneratedResult constant_generated(const FinCategory& c);

}  // namespace semisep::fincat
