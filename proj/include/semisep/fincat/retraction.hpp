#pragma once

#include "semisep/fincat/functor.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace semisep::fincat {

/// A family P_{X,Y}: Hom_D(FX,FY) → Hom_E(HX,HY). With H the identity of the
/// source this is a hom-retraction candidate for F.
struct HomFamily {
    FinFunctor F;
    FinFunctor H;
    /// values[X·n+Y][i] is the image of the i-th morphism of Hom_D(FX,FY).
    std::vector<std::vector<Mor>> values;

    Mor at(Obj x, Obj y, Mor k) const;
};

enum class Mode { semiseparable, separable, naturally_full };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct SearchOptions {
    std::size_t bound = 64;
};

/// Binaturality P(Fl∘k∘Fh) = Hl∘P(k)∘Hh over all h, k, l. Empty when valid.
std::vector<std::string> validate(const HomFamily& p);
/// Mode condition for a hom-retraction candidate (H = Id). Empty when valid.
std::vector<std::string> check_mode(const HomFamily& p, Mode mode);

struct RetractionResult {
    std::optional<HomFamily> witness;
    std::size_t nodes = 0;
    bool holds() const noexcept { return witness.has_value(); }
};

/// Backtracking search for a binatural P meeting the mode condition. Variables
/// are visited in lexicographic (X,Y) order, candidates in id-first order, so
/// the first witness found is the least one. Throws BoundExceeded if either
/// category has more morphisms than `opts.bound`.
RetractionResult decide_retraction(const FinFunctor& f, Mode mode, const SearchOptions& opts = {});

/// Binatural P^{F,H} with P(Ff) = Hf.
RetractionResult relative_separable(const FinFunctor& f, const FinFunctor& h, const SearchOptions& opts = {});

/// Natural idempotent e: Id_C → Id_C, stored by components.
struct IdempotentNat {
    CategoryPtr category;
    std::vector<Mor> components;
    bool is_identity() const;
};

struct IdempotentReport {
    IdempotentNat e;
    bool idempotent = false;
    bool natural = false;
    bool inverts_to_identity = false;  // Fe = Id_F
    bool universal = false;            // Ff = Fg ⟺ e_B∘f = e_B∘g
    std::size_t qualifying_count = 0;  // natural idempotents with the two properties above
    bool ok() const noexcept {
        return idempotent && natural && inverts_to_identity && universal && qualifying_count == 1;
    }
};

/// e_X = P_{X,X}(id_FX) with every property and uniqueness checked.
/// Throws PreconditionError if P is not a semiseparability witness.
IdempotentReport associated_idempotent(const FinFunctor& f, const HomFamily& p);

/// Checks whether the natural idempotent e is identified by F, i.e. Fe = Id_F.
bool functor_inverts(const FinFunctor& f, const std::vector<Mor>& e);

enum class TransferOutcome { transferred, not_applicable };

struct TransferResult {
    TransferOutcome outcome = TransferOutcome::not_applicable;
    std::string reason;
    std::optional<HomFamily> witness;  // semiseparability witness for F
};

/// H a retract of F via φ: F → H, ψ: H → F with φ∘ψ = Id_H. If H is
/// semiseparable with idempotent e and Fe = Id_F, builds P^F = P^H∘P^{F,H}
/// with P^{F,H}(g) = φ_Y∘g∘ψ_X. Throws PreconditionError if φ∘ψ ≠ Id_H.
TransferResult retract_transfer(const FinFunctor& h, const FinFunctor& f, const NatTrans& phi, const NatTrans& psi,
                                const SearchOptions& opts = {});

}  // namespace semisep::fincat
