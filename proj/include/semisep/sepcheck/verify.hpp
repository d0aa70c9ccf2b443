#pragma once

#include "semisep/algstruct/structures.hpp"
#include "semisep/certificate.hpp"

namespace semisep::sepcheck::verify {

using algstruct::AlgebraMap;
using algstruct::Bimodule;
using algstruct::CoalgebraMap;
using algstruct::Coring;
using linalg::Matrix;
using linalg::Vector;

// Direct substitution checks on basis elements. These evaluate every law
// from the raw structure constants.

enum class Kind { semiseparable, separable, naturally_full };

/// E: S → R an R-bimodule map with φE(1) = 1, E∘φ = Id or φ∘E = Id.
Certificates ring_ext(const AlgebraMap& phi, const Matrix& E, Kind kind);

/// χ: D → C a D-bicomodule map with ε∘χ∘ψ = ε, ψ∘χ = Id or χ∘ψ = Id.
Certificates coalg_map(const CoalgebraMap& psi, const Matrix& chi, Kind kind);

/// z ∈ C^R with ε(z)c = c (semiseparable), ε(z) = 1 (separable) or c = ε(c)z.
Certificates coring(const Coring& c, const Vector& z, Kind kind);

/// Σ c_{ab} f_a⊗m_b (index a·dim M + b) central in M*⊗_R M with
/// Σ m f_i(m_i) = m, or Σ f_i(m_i) = 1 when separable. Functionals are S.dim × M.dim.
Certificates bimodule(const Bimodule& m, const std::vector<Matrix>& functionals, const Vector& tensor, bool separable);

}  // namespace semisep::sepcheck::verify
