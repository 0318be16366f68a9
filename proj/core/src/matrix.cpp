#include "evoalg/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "evoalg/error.hpp"

namespace evoalg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw MismatchError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].field() != field) {
                throw MismatchError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is in " +
                                    rows[i][j].field().name() + ", expected " + field.name());
            }
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    s.reserve(rows.size());
    for (const auto& row : rows) {
        auto& out = s.emplace_back();
        for (long long v : row) out.push_back(field.from_int(v));
    }
    return from_rows(field, s);
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw MismatchError("matrix product shape/field mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) throw MismatchError("matrix sum mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) throw MismatchError("matrix difference mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

Matrix Matrix::entrywise_square() const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= x;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).to_string();
        }
        os << "]\n";
    }
    return os.str();
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw MismatchError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const Field& f = m.field();
    if (n == 0) return f.one();
    Matrix a = m;
    Scalar prev = f.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k).is_zero()) ++piv;
            if (piv == n) return f.zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    Scalar d = a(n - 1, n - 1);
    return negate ? -d : d;
}

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        const Scalar inv = a(r, c).inverse();
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c).is_zero()) continue;
            const Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace evoalg
