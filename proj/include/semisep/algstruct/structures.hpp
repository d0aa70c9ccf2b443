#pragma once

#include "semisep/linalg/solve.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace semisep::algstruct {

using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Vector;

/// Associative unital algebra given by structure constants:
/// b_i·b_j = mult[i·dim + j].
struct FDAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<Vector> mult;
    Vector unit;

    Vector multiply(const Vector& a, const Vector& b) const;
    Vector one() const { return unit; }
    /// Matrix of x ↦ a·x.
    Matrix left_mult(const Vector& a) const;
    /// Matrix of x ↦ x·a.
    Matrix right_mult(const Vector& a) const;
    Vector basis_vector(std::size_t i) const { return linalg::unit_vector(dim, i, field); }
};

bool operator==(const FDAlgebra& a, const FDAlgebra& b);

/// (R,S)-bimodule: r·m = left[r] m, m·s = right[s] m for basis elements r, s.
struct Bimodule {
    FDAlgebra left_algebra;
    FDAlgebra right_algebra;
    std::size_t dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    Field field() const { return left_algebra.field; }
    /// Action matrices of arbitrary algebra elements (linear in the element).
    Matrix left_action(const Vector& r) const;
    Matrix right_action(const Vector& s) const;
    Vector act_left(const Vector& r, const Vector& m) const { return left_action(r).apply(m); }
    Vector act_right(const Vector& m, const Vector& s) const { return right_action(s).apply(m); }
};

/// Δ(c_i) = comult[i] in the flat tensor (index j·dim + k), ε(c_i) = counit[i].
struct FDCoalgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<Vector> comult;
    Vector counit;

    Vector coproduct(const Vector& c) const;
    Scalar eps(const Vector& c) const;
};

/// R-coring. delta (dim² × dim) lands in the flat tensor C⊗C; only its image
/// in C⊗_R C matters. eps is R.dim × dim.
struct Coring {
    Bimodule C;
    Matrix delta;
    Matrix eps;
    const FDAlgebra& base() const { return C.left_algebra; }
};

struct Bialgebra {
    FDAlgebra algebra;
    FDCoalgebra coalgebra;
};

/// Unital algebra map, matrix is target.dim × source.dim.
struct AlgebraMap {
    FDAlgebra source;
    FDAlgebra target;
    Matrix matrix;
    Vector operator()(const Vector& v) const { return matrix.apply(v); }
};

/// Linear map between coalgebras, matrix is target.dim × source.dim.
struct CoalgebraMap {
    FDCoalgebra source;
    FDCoalgebra target;
    Matrix matrix;
};

std::vector<std::string> validate(const FDAlgebra& a);
std::vector<std::string> validate(const Bimodule& m);
std::vector<std::string> validate(const FDCoalgebra& c);
std::vector<std::string> validate(const Coring& c);
std::vector<std::string> validate(const Bialgebra& b);
std::vector<std::string> validate(const AlgebraMap& f);
std::vector<std::string> validate(const CoalgebraMap& f);

/// Throws InputError listing the violations, if any.
template <class T>
void require_valid(const T& x, const std::string& what);

// Builders.
FDAlgebra ground_algebra(Field f);
/// 𝕜[x]/(x^n), basis 1, x, …, x^{n-1}.
FDAlgebra truncated_polynomial(Field f, std::size_t n);
/// 𝕜^n with componentwise product.
FDAlgebra diagonal_algebra(Field f, std::size_t n);
FDAlgebra matrix_algebra(Field f, std::size_t n);
FDAlgebra product(const FDAlgebra& a, const FDAlgebra& b);
/// Monoid algebra of a multiplication table over {0..n-1} with identity `unit`.
FDAlgebra monoid_algebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                         std::vector<std::string> names = {});

/// A as an (A,A)-bimodule.
Bimodule regular_bimodule(const FDAlgebra& a);
/// 𝕜^n over (𝕜,𝕜).
Bimodule vector_bimodule(Field f, std::size_t n);
/// Restriction of scalars of M ∈ _A M_B along f: R → A and g: S → B.
Bimodule restrict(const Bimodule& m, const AlgebraMap& f, const AlgebraMap& g);
AlgebraMap identity_map(const FDAlgebra& a);
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

/// The coring R with Δ(r) = r⊗1 and ε = Id.
Coring trivial_coring(const FDAlgebra& r);

}  // namespace semisep::algstruct
