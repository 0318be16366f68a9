#ifndef EVOALG_ALGEBRA_HPP
#define EVOALG_ALGEBRA_HPP

#include <vector>

#include "evoalg/digraph.hpp"
#include "evoalg/matrix.hpp"
#include "evoalg/monomial.hpp"

namespace evoalg {

/// Element of an evolution algebra in natural-basis coordinates.
struct AlgebraElement {
    std::vector<Scalar> coords;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& s) const;
};

/// The evolution algebra E(A) on a natural basis e_1..e_n.
///
/// Column convention: column j of the structure matrix holds the coordinates
/// of e_j^2, i.e. e_j^2 = sum_i a_ij e_i, and e_i e_j = 0 for i != j. The
/// row convention is never used.
///
/// Immutable; the determinant and the zero-pattern digraph are computed once
/// on construction.
class EvolutionAlgebra {
public:
    explicit EvolutionAlgebra(Matrix structure);

    const Matrix& structure() const { return a_; }
    const Field& field() const { return a_.field(); }
    std::size_t dimension() const { return a_.rows(); }
    const Scalar& det() const { return det_; }
    /// E^2 = E, equivalently det(A) != 0.
    bool is_idempotent() const { return !det_.is_zero(); }
    const Digraph& graph() const { return graph_; }

    AlgebraElement basis(std::size_t i) const;
    AlgebraElement zero() const;
    /// coords(x * y) = A (x .* y) with .* the coordinatewise product.
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Throws SingularError unless idempotent.
    void require_idempotent(std::string_view context) const;

private:
    Matrix a_;
    Scalar det_;
    Digraph graph_;
};

EvolutionAlgebra make_algebra(const Field& field, const std::vector<std::vector<Scalar>>& entries);

/// B = P A (P^(2))^{-1}: the structure matrix seen through the basis change P,
/// so that B P^(2) = P A. The inverse of P^(2) is read off the monomial form.
/// Throws SingularError when A is singular.
Matrix transport_structure(const Matrix& a, const MonomialMap& p);

}  // namespace evoalg

#endif  // EVOALG_ALGEBRA_HPP
