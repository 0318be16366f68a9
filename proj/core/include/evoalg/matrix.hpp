#ifndef EVOALG_MATRIX_HPP
#define EVOALG_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "evoalg/scalars.hpp"

namespace evoalg {

/// Dense row-major matrix of exact scalars over a single field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    /// Builds from nested rows; every row must have the same length and every
    /// entry must belong to `field`.
    static Matrix from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows);
    /// Integer entries mapped into `field`.
    static Matrix from_ints(const Field& field, const std::vector<std::vector<long long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    /// Entrywise square (the P^(2) of a basis-change matrix).
    Matrix entrywise_square() const;
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Multi-line text, one row per line, for diagnostics.
    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Scalar determinant(const Matrix& m);

/// Rank by Gaussian elimination over the field.
std::size_t rank(const Matrix& m);

}  // namespace evoalg

#endif  // EVOALG_MATRIX_HPP
