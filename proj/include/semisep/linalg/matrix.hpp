#pragma once

#include "semisep/linalg/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace semisep::linalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Field f);
Vector unit_vector(std::size_t n, std::size_t i, Field f);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);
/// Flat tensor v ⊗ w with index i·dim(w)+j.
Vector kron(const Vector& v, const Vector& w);
std::string to_string(const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f);
    static Matrix identity(std::size_t n, Field f);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Field f);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Field field() const noexcept { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_col(std::size_t j, const Vector& v);
    Matrix transpose() const;
    Vector apply(const Vector& v) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

/// Kronecker product matching the flat tensor index convention.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace semisep::linalg
