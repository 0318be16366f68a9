#ifndef EVOALG_MONOMIAL_HPP
#define EVOALG_MONOMIAL_HPP

#include <compare>
#include <vector>

#include "evoalg/digraph.hpp"
#include "evoalg/matrix.hpp"
#include "evoalg/scalars.hpp"

namespace evoalg {

/// The linear map e_i -> d_i e_{sigma(i)}, whose matrix in the natural basis
/// is P_sigma * diag(d). All d_i are nonzero.
class MonomialMap {
public:
    MonomialMap(Permutation sigma, std::vector<Scalar> scales);

    static MonomialMap identity(const Field& field, std::size_t n);
    static MonomialMap diagonal(std::vector<Scalar> scales);
    static MonomialMap permutation(const Field& field, Permutation sigma);

    std::size_t size() const { return sigma_.size(); }
    const Field& field() const { return scales_.front().field(); }
    const Permutation& sigma() const { return sigma_; }
    const std::vector<Scalar>& scales() const { return scales_; }

    bool is_identity() const;
    bool is_diagonal() const { return sigma_.is_identity(); }

    /// P_sigma * diag(d): column i holds d_i in row sigma(i).
    Matrix matrix() const;

    /// Compact text such as "(1 2) diag(z, -1 - z)".
    std::string to_string() const;

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
    friend std::strong_ordering operator<=>(const MonomialMap& a, const MonomialMap& b);

private:
    Permutation sigma_;
    std::vector<Scalar> scales_;
};

/// Matrix product (P_s D)(P_t D') = P_{st} D'' with D''_i = d_{t(i)} d'_i.
MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner);
MonomialMap inverse(const MonomialMap& g);
inline MonomialMap operator*(const MonomialMap& a, const MonomialMap& b) { return compose(a, b); }

/// P_sigma, with p_ij = 1 exactly when sigma(j) = i.
Matrix permutation_matrix(const Field& field, const Permutation& sigma);

/// P * P: the n x n(n-1)/2 matrix with columns indexed by pairs i < j in
/// lexicographic order and entries c^k_ij = p_ki p_kj.
Matrix star_product(const Matrix& p);

}  // namespace evoalg

#endif  // EVOALG_MONOMIAL_HPP
