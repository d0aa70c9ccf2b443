#pragma once

#include "semisep/algstruct/structures.hpp"
#include "semisep/verdict.hpp"

#include <optional>

namespace semisep::hopf {

using algstruct::Bialgebra;
using algstruct::FDCoalgebra;
using linalg::Field;
using linalg::Matrix;
using linalg::Vector;

struct AntipodeProperties {
    bool right_antipode = false;  // Σ b₁S(b₂) = ε(b)1
    bool anti_mult = false;       // S(ab) = S(b)S(a)
    bool anti_comult = false;     // Δ(S(b)) = Σ S(b₂)⊗S(b₁)
    bool all() const { return right_antipode && anti_mult && anti_comult; }
};

/// Throws InputError on a dimension mismatch.
AntipodeProperties verify_antipode_properties(const Bialgebra& b, const Matrix& s);

struct AntipodeSearch {
    Status status = Status::fails;
    std::optional<Matrix> S;       // fully verified when status is holds
    Verdict linear;                // the right-antipode identity system
    std::optional<Matrix> particular;
    std::vector<Matrix> directions;  // solution space of the linear system
    std::size_t scanned = 0;
};

/// Solves the right-antipode identity, which is linear in S, then checks the
/// two quadratic conditions. A positive-dimensional solution space is scanned
/// exhaustively over 𝔽_p when at most `bound` candidates; otherwise indeterminate.
AntipodeSearch find_right_antipode(const Bialgebra& b, std::size_t bound = 1u << 16);

struct HopfVerdict {
    Verdict right_antipode_exists;
    Verdict anti_mult;
    Verdict anti_comult;
    Verdict coinvariant_semiseparable;
    std::optional<Matrix> S;
};

HopfVerdict coinvariant_verdict(const Bialgebra& b, std::size_t bound = 1u << 16);

/// 𝕜G with Δ(g) = g⊗g, ε(g) = 1. Throws InputError unless the table is a group.
Bialgebra group_algebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                        std::vector<std::string> names = {});
/// 𝕜M for a monoid table. Throws InputError if the table is not associative.
Bialgebra monoid_bialgebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                           std::vector<std::string> names = {});
/// Basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x.
Bialgebra sweedler_h4(Field f);
/// Every basis element grouplike.
FDCoalgebra grouplike_coalgebra(Field f, std::vector<std::string> names);

bool is_grouplike(const FDCoalgebra& c, const Vector& g);
/// Indices of the candidates that are grouplike.
std::vector<std::size_t> grouplike_verify(const FDCoalgebra& c, const std::vector<Vector>& candidates);
/// f: C → D (D.dim × C.dim) comultiplicative and counital.
bool coalgebra_map_verify(const Matrix& f, const FDCoalgebra& c, const FDCoalgebra& d);
/// All grouplikes over 𝔽_p by exhaustive scan. Throws PreconditionError over ℚ
/// and BoundExceeded when p^dim exceeds the bound.
std::vector<Vector> enumerate_grouplikes(const FDCoalgebra& c, std::size_t bound = 1u << 16);

}  // namespace semisep::hopf
