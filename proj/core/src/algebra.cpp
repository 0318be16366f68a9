#include "evoalg/algebra.hpp"

#include "evoalg/error.hpp"

namespace evoalg {

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (coords.size() != o.coords.size()) throw MismatchError("element dimension mismatch");
    AlgebraElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    AlgebraElement r = *this;
    for (auto& c : r.coords) c *= s;
    return r;
}

EvolutionAlgebra::EvolutionAlgebra(Matrix structure)
    : a_(std::move(structure)), det_(a_.field().zero()) {
    if (!a_.is_square() || a_.rows() == 0) throw MismatchError("structure matrix must be square and nonempty");
    det_ = determinant(a_);
    graph_ = graph_of(a_);
}

AlgebraElement EvolutionAlgebra::basis(std::size_t i) const {
    AlgebraElement e = zero();
    e.coords.at(i) = field().one();
    return e;
}

AlgebraElement EvolutionAlgebra::zero() const { return {std::vector<Scalar>(dimension(), field().zero())}; }

AlgebraElement EvolutionAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    const std::size_t n = dimension();
    if (x.coords.size() != n || y.coords.size() != n) throw MismatchError("element dimension mismatch");
    AlgebraElement r = zero();
    for (std::size_t j = 0; j < n; ++j) {
        const Scalar w = x.coords[j] * y.coords[j];
        if (w.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) r.coords[i] += a_(i, j) * w;
    }
    return r;
}

void EvolutionAlgebra::require_idempotent(std::string_view context) const {
    if (!is_idempotent()) {
        throw SingularError(std::string(context) + ": structure matrix is singular (algebra is not idempotent)");
    }
}

EvolutionAlgebra make_algebra(const Field& field, const std::vector<std::vector<Scalar>>& entries) {
    const Matrix m = Matrix::from_rows(field, entries);
    if (!m.is_square()) throw MismatchError("structure matrix must be square");
    return EvolutionAlgebra(m);
}

Matrix transport_structure(const Matrix& a, const MonomialMap& p) {
    if (!a.is_square() || a.rows() != p.size()) throw MismatchError("transport_structure: shape mismatch");
    if (a.field() != p.field()) throw MismatchError("transport_structure: field mismatch");
    if (determinant(a).is_zero()) throw SingularError("transport_structure: structure matrix is singular");
    // B_{s(i), s(j)} = d_i a_ij / d_j^2
    const std::size_t n = a.rows();
    const auto& s = p.sigma();
    const auto& d = p.scales();
    Matrix b(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Scalar inv_sq = (d[j] * d[j]).inverse();
        for (std::size_t i = 0; i < n; ++i) {
            if (a(i, j).is_zero()) continue;
            b(s(i), s(j)) = d[i] * a(i, j) * inv_sq;
        }
    }
    return b;
}

}  // namespace evoalg
