#pragma once

#include "semisep/certificate.hpp"
#include "semisep/fincat/retraction.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semisep::adjunction {

using fincat::CategoryPtr;
using fincat::FinFunctor;
using fincat::Mode;
using fincat::Mor;
using fincat::NatTrans;
using fincat::Obj;

/// F ⊣ G with F: 𝒞 → 𝒟, unit η: Id → GF and counit ε: FG → Id.
struct Adjunction {
    FinFunctor F;
    FinFunctor G;
    NatTrans unit;
    NatTrans counit;
};

std::vector<std::string> validate(const Adjunction& a);

/// Gᵒᵖ ⊣ Fᵒᵖ with unit εᵒᵖ and counit ηᵒᵖ.
Adjunction dualize(const Adjunction& a);

/// Every adjunction F ⊣ G for the given functors. Searches unit and counit
/// exhaustively; only for small categories.
std::vector<Adjunction> find_adjunctions(const FinFunctor& f, const FinFunctor& g);

/// All right adjoints of F among functors 𝒟 → 𝒞, with one adjunction each.
/// Throws BoundExceeded when either category has more than `bound` morphisms.
std::vector<Adjunction> find_right_adjoints(const FinFunctor& f, std::size_t bound = 16);

enum class Side { left, right };

struct Regularity {
    /// ν: GF → Id (left) or γ: Id → FG (right).
    std::optional<NatTrans> witness;
    bool agrees_with_decider = false;
    bool holds() const { return witness.has_value(); }
};

/// Left: ν with η∘ν∘η = η (semiseparable), ν∘η = Id (separable),
/// η∘ν = Id (naturally full). Right: γ with ε∘γ∘ε = ε, ε∘γ = Id, γ∘ε = Id.
/// The verdict is compared with decide_retraction on F or G.
Regularity rafael_regularity(const Adjunction& a, Side side, Mode mode = Mode::semiseparable);

/// The three equalities of the regularity lemma for a candidate ν (left) or γ (right).
std::array<bool, 3> lemma_b_profile(const Adjunction& a, Side side, const NatTrans& w);

/// (T, m: TT → T, u: Id → T).
struct Monad {
    FinFunctor T;
    NatTrans m;
    NatTrans u;
};

std::vector<std::string> validate(const Monad& t);

/// (GF, GεF, η).
Monad monad_of(const Adjunction& a);

struct Algebra {
    Obj carrier;
    Mor action;  // μ: TX → X
};

struct EMCategory {
    Monad monad;
    std::vector<Algebra> algebras;
    CategoryPtr category;
    FinFunctor U;  // forgetful
    FinFunctor V;  // free, X ↦ (TX, m_X)
    Adjunction free_forgetful;
    std::optional<Obj> find(const Algebra& alg) const;
};

/// Every algebra and algebra morphism. Throws BoundExceeded past `bound` algebras.
EMCategory eilenberg_moore(const Monad& t, std::size_t bound = 64);

struct EMResult {
    Monad monad;
    EMCategory em;
    FinFunctor K;  // D ↦ (GD, Gε_D)
    Certificates certificates;
};

EMResult build_em(const Adjunction& a, std::size_t bound = 64);

/// σ: T → TT with m∘σ = Id and Tm∘σT = σ∘m = mT∘Tσ.
std::optional<NatTrans> separable_monad_check(const Monad& t);

struct IdempotentReport {
    bool eps_F = false;  // εF iso
    bool G_eps = false;  // Gε iso
    bool F_eta = false;  // Fη iso
    bool eta_G = false;  // ηG iso
    bool idempotent() const { return eps_F && G_eps && F_eta && eta_G; }
    bool consistent() const { return eps_F == G_eps && G_eps == F_eta && F_eta == eta_G; }
};

IdempotentReport idempotent_adjunction_check(const Adjunction& a);

struct SsepMonadReport {
    bool right_semiseparable = false;   // G
    bool monad_separable = false;
    bool forgetful_separable = false;
    bool comparison_natfull = false;    // K
    bool left_semiseparable = false;    // F
    bool comonad_coseparable = false;
    bool coforgetful_separable = false;
    bool cocomparison_natfull = false;  // K^{FG}
    bool right_holds() const {
        return right_semiseparable == (monad_separable && comparison_natfull) &&
               monad_separable == forgetful_separable;
    }
    bool left_holds() const {
        return left_semiseparable == (comonad_coseparable && cocomparison_natfull) &&
               comonad_coseparable == coforgetful_separable;
    }
};

/// Both directions; the comonad side runs the monad path on the dual adjunction.
SsepMonadReport ssep_monad_theorem(const Adjunction& a, std::size_t bound = 64);

/// F ⊣ G ⊣ H with F, H: 𝒞 → 𝒟 and G: 𝒟 → 𝒞.
struct AdjointTriple {
    Adjunction left;   // F ⊣ G
    Adjunction right;  // G ⊣ H
};

std::vector<std::string> validate(const AdjointTriple& t);

struct TripleReport {
    std::array<bool, 3> F{};  // semiseparable, separable, naturally full
    std::array<bool, 3> H{};
    /// γʳ = GHνˡ∘GηʳF∘ηˡ built from each νˡ found, and whether it is a
    /// witness of the same kind on the right.
    std::array<std::optional<NatTrans>, 3> gamma;
    std::array<bool, 3> gamma_ok{};
    bool consistent() const;
};

/// Builds γʳ = GHνˡ∘GηʳF∘ηˡ.
NatTrans transport_witness(const AdjointTriple& t, const NatTrans& nu_left);

TripleReport adjoint_triple(const AdjointTriple& t);

struct FrobeniusReport {
    bool frobenius = false;      // F ≅ F′
    bool on_the_nose = false;    // F = F′ as tables
    bool coreflection = false;   // F fully faithful (unit of F ⊣ G invertible)
    bool reflection = false;     // F′ fully faithful (counit of G ⊣ F′ invertible)
    bool coherent = false;       // γ∘ε = Id for some adjunction G ⊣ F
    bool bireflection = false;
    bool semiseparable = false;  // G
    bool naturally_full = false; // G
    /// Rows: the four transformation families; columns: the three equalities.
    /// Only filled when G is Frobenius.
    std::array<std::array<bool, 3>, 4> profile{};
    bool equivalences_hold = false;
};

FrobeniusReport frobenius_bireflection(const FinFunctor& g, const Adjunction& left, const Adjunction& right);

struct SigmaReport {
    NatTrans sigma;  // H → F
    std::optional<NatTrans> retraction;  // τ with τ∘σ = Id_H
    bool invertible = false;
    bool h_semiseparable = false;
    bool consistent() const { return retraction.has_value() == invertible && invertible == h_semiseparable; }
};

/// σ = Fεʳ∘(εˡH)⁻¹. Throws PreconditionError unless εˡ is invertible.
SigmaReport sigma_split(const AdjointTriple& t);

}  // namespace semisep::adjunction
