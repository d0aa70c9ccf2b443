#pragma once

#include "semisep/linalg/matrix.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace semisep::linalg {

/// Reduced row echelon form; pivots chosen left to right, topmost nonzero row first.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Kernel basis: one vector per free column j, with a 1 at j and zeros at
/// the other free columns. Image basis: nonzero rows of rref(Aᵀ).
struct KernelImage {
    std::vector<Vector> kernel;
    std::vector<Vector> image;
    std::size_t rank = 0;
};

KernelImage kernel_and_image(const Matrix& a);
std::vector<Vector> kernel(const Matrix& a);

struct AffineSolution {
    bool feasible = false;
    Vector particular;  // free variables set to zero
    std::vector<Vector> kernel;
    std::size_t rank_a = 0;
    std::size_t rank_augmented = 0;
};

AffineSolution solve_affine(const Matrix& a, const Vector& b);

/// Canonical basis of span(vectors): the nonzero rows of the rref.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient, Field f);
bool in_span(const std::vector<Vector>& vectors, const Vector& v, std::size_t ambient, Field f);
std::vector<Vector> subspace_sum(const std::vector<Vector>& u, const std::vector<Vector>& w, std::size_t ambient,
                                 Field f);
std::vector<Vector> subspace_intersection(const std::vector<Vector>& u, const std::vector<Vector>& w,
                                          std::size_t ambient, Field f);

/// W/U for U ⊆ W. Coset representatives are the rref of W reduced modulo rref(U).
/// `projection` (q×n) gives quotient coordinates of vectors of W; `section` (n×q)
/// has the representatives as columns.
struct Quotient {
    std::vector<Vector> representatives;
    Matrix projection;
    Matrix section;
    std::size_t dim() const noexcept { return representatives.size(); }
};

Quotient quotient(const std::vector<Vector>& u, const std::vector<Vector>& w, std::size_t ambient, Field f);
/// Quotient of the whole ambient space by U.
Quotient quotient(const std::vector<Vector>& u, std::size_t ambient, Field f);

/// Matrix of a linear map k^n_in → k^n_out, built column by column.
Matrix matrix_of(std::size_t n_in, std::size_t n_out, Field f, const std::function<Vector(const Vector&)>& map);

/// Reshape a row-major flattening into a rows × cols matrix, and back.
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols, Field f);
Vector flatten(const Matrix& m);

/// Inverse of a square matrix, if invertible.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace semisep::linalg
