#pragma once

#include "semisep/algstruct/structures.hpp"

#include <optional>

namespace semisep::algstruct {

/// M ⊗_R N as an (A,B)-bimodule. Flat tensor index i·dim N + j.
struct BalancedTensor {
    Bimodule bimodule;
    linalg::Quotient quotient;
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    Vector project(const Vector& flat) const { return quotient.projection.apply(flat); }
    Vector element(const Vector& m, const Vector& n) const { return project(linalg::kron(m, n)); }
    /// A flat representative of a quotient vector.
    Vector lift(const Vector& x) const { return quotient.section.apply(x); }
};

/// Throws InputError when the middle algebras differ.
BalancedTensor balanced_tensor(const Bimodule& m, const Bimodule& n);

/// Basis of _RHom_S(M,N); each map is N.dim × M.dim.
std::vector<Matrix> bimodule_map_space(const Bimodule& m, const Bimodule& n);

/// M^R by stacking all commutators into one kernel.
std::vector<Vector> invariants(const Bimodule& m);
/// M^R as the intersection of the per-generator kernels.
std::vector<Vector> invariants_by_intersection(const Bimodule& m);

/// M* = Hom_S(M,S) as an (S,R)-bimodule with (s f r)(m) = s f(r m).
struct DualModule {
    Bimodule bimodule;
    std::vector<Matrix> maps;  // S.dim × M.dim, one per basis element of M*
    /// The functional with the given coordinates.
    Matrix functional(const Vector& coords) const;
    /// Coordinates of a right S-linear functional, which must lie in the span.
    Vector coordinates(const Matrix& f) const;
};

DualModule dual_module(const Bimodule& m);

struct CenterReport {
    std::vector<Vector> center;
    bool checked = false;
    bool central = false;
    bool idempotent = false;
    /// x ↦ xz is an idempotent of End(_A A) commuting with every endomorphism.
    bool endomorphism_central_idempotent = false;
    bool consistent() const { return !checked || endomorphism_central_idempotent == (central && idempotent); }
};

CenterReport center_and_idempotent(const FDAlgebra& a, const std::optional<Vector>& z = std::nullopt);

struct TraceReport {
    DualModule dual;
    std::vector<Vector> trace_ideal;
    bool generator = false;
    bool fgp = false;
    /// Σ e_i·e_i*(m) = m with e_i the standard basis of M and e_i* given by
    /// coordinates in the basis of M*.
    std::vector<Vector> dual_basis_elements;
    std::vector<Vector> dual_basis_functionals;
    /// Directions of the solution space, concatenated functional coordinates.
    std::vector<Vector> dual_basis_directions;
};

TraceReport trace_ideal_and_fgp(const Bimodule& m);

/// Az as an algebra with unit z, for a central idempotent z. `inclusion`
/// maps Az into A (not unital unless z = 1); `projection` is a ↦ az.
struct CornerAlgebra {
    FDAlgebra algebra;
    Matrix inclusion;   // A.dim × corner.dim
    Matrix projection;  // corner.dim × A.dim
};

CornerAlgebra corner_algebra(const FDAlgebra& a, const Vector& z);

/// The subalgebra spanned by the given vectors (assumed closed and containing 1).
struct Subalgebra {
    FDAlgebra algebra;
    Matrix inclusion;  // A.dim × sub.dim
};

Subalgebra subalgebra(const FDAlgebra& a, const std::vector<Vector>& spanning);

/// Coordinates of v in the rref basis produced by span_basis, if it lies in the span.
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v);

/// (A⊗I_n)x and (I_m⊗B)x for x in a flat tensor, without forming the Kronecker product.
Vector tensor_left(const Matrix& a, const Vector& x, std::size_t n);
Vector tensor_right(std::size_t m, const Matrix& b, const Vector& x);

/// C⊗_R C⊗_R C, projecting from the flat triple tensor.
struct TripleTensor {
    BalancedTensor two;
    BalancedTensor three;
    Vector project(const Vector& flat) const;
};

TripleTensor triple_tensor(const Bimodule& c);

}  // namespace semisep::algstruct
