#pragma once

#include "bgd/field.hpp"

#include <optional>
#include <vector>

namespace bgd {

using Vec = std::vector<Scalar>;

/// Dense exact matrix over a fixed field, row-major. A linear map from an
/// n-dimensional space to an m-dimensional one is an m x n matrix acting on
/// column vectors; composition is the matrix product.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<Vec>& rows);
    static Matrix col_vector(Field f, const Vec& v);
    static Matrix row_vector(Field f, const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix operator*(const Matrix& b) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    /// Kronecker product; block (i,j) of the result is a(i,j) * b, so basis
    /// e_i (x) e_j of the tensor square sits at index i * b.rows + j.
    static Matrix kron(const Matrix& a, const Matrix& b);

    Matrix hstack(const Matrix& b) const;
    Matrix vstack(const Matrix& b) const;

    Vec apply(const Vec& v) const;
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);

    bool operator==(const Matrix& b) const;
    bool operator!=(const Matrix& b) const { return !(*this == b); }
    bool is_zero() const;
    bool is_identity() const;

    /// Index of the first column where the two matrices differ; the witness
    /// basis vector for a failed exact equation.
    std::optional<std::size_t> first_diff_col(const Matrix& b) const;

private:
    Field field_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);

/// v (x) w with the same index convention as Matrix::kron.
Vec vec_kron(const Field& f, const Vec& v, const Vec& w);

}  // namespace bgd
