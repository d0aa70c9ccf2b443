#pragma once

#include "semisep/certificate.hpp"
#include "semisep/fincat/retraction.hpp"

#include <optional>
#include <vector>

namespace semisep::coident {

using fincat::CategoryPtr;
using fincat::FinFunctor;
using fincat::HomFamily;
using fincat::IdempotentNat;
using fincat::Mor;
using fincat::NatTrans;
using fincat::Obj;

/// Quotient 𝒞_e of 𝒞 by f ~ g ⟺ e_B∘f = e_B∘g, with the quotient functor H.
struct Coidentifier {
    IdempotentNat e;
    CategoryPtr quotient;
    FinFunctor H;
    /// Quotient morphism → least base morphism of its class.
    std::vector<Mor> representative;
    /// P^H(f̄) = e_B∘f.
    HomFamily witness;
    Certificates certificates;

    const CategoryPtr& base() const { return e.category; }
    Mor class_of(Mor f) const { return H.on_morphism(f); }
};

/// Checks e∘e = e and naturality. Empty when valid.
std::vector<std::string> validate(const IdempotentNat& e);

/// Throws PreconditionError if e is not a natural idempotent.
Coidentifier build_coidentifier(const IdempotentNat& e);

/// The unique F_e with F_e∘H = F. Throws PreconditionError ("not liftable")
/// unless Fe = Id_F.
FinFunctor induce_through(const Coidentifier& q, const FinFunctor& f);

/// Orthogonality form: S faithful and S∘F = G∘H give the unique F_e with
/// F_e∘H = F and S∘F_e = G.
FinFunctor induce_through(const Coidentifier& q, const FinFunctor& f, const FinFunctor& s, const FinFunctor& g);

/// F = F_e∘H with H naturally full and F_e separable.
struct Factorization {
    Coidentifier coidentifier;
    FinFunctor Fe;
    HomFamily fe_witness;  // separability witness of F_e
    Certificates certificates;
    bool ok() const { return all_hold(certificates) && all_hold(coidentifier.certificates); }
};

/// Throws PreconditionError if F is not semiseparable.
Factorization factorize_semiseparable(const FinFunctor& f, const fincat::SearchOptions& opts = {});

/// π_X: X → P(X), ι_X: P(X) → X with ι∘π = e and π∘ι = id.
struct SplitWitness {
    std::vector<Obj> through;
    std::vector<Mor> pi;
    std::vector<Mor> iota;
};

std::vector<std::string> validate(const IdempotentNat& e, const SplitWitness& w);

/// Endofunctor P with P(f) = π_Y∘f∘ι_X.
FinFunctor split_endofunctor(const IdempotentNat& e, const SplitWitness& w);

/// Exhaustive search over through-objects (declaration order) and
/// morphism pairs; the first assembly with π, ι natural wins.
std::optional<SplitWitness> split_idempotent(const IdempotentNat& e);

/// P_e ⊣ H ⊣ P_e built from a splitting, with every law certified.
struct Bireflection {
    FinFunctor Pe;         // 𝒞_e → 𝒞, P_e∘H = P
    NatTrans left_unit;    // Id → H P_e, class of π
    NatTrans left_counit;  // P_e H → Id, ι
    NatTrans right_unit;   // Id → P_e H, π
    NatTrans right_counit; // H P_e → Id, class of ι
    Certificates certificates;
    bool ok() const { return all_hold(certificates); }
};

/// Throws PreconditionError if w does not split q.e.
Bireflection bireflection_from_split(const Coidentifier& q, const SplitWitness& w);

}  // namespace semisep::coident
