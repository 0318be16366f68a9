#include "evoalg/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "evoalg/error.hpp"

namespace evoalg {

MonomialMap::MonomialMap(Permutation sigma, std::vector<Scalar> scales)
    : sigma_(std::move(sigma)), scales_(std::move(scales)) {
    if (scales_.empty()) throw DomainError("monomial map needs at least one coordinate");
    if (scales_.size() != sigma_.size()) throw MismatchError("monomial map: permutation and scale sizes differ");
    for (const auto& d : scales_) {
        if (d.field() != scales_.front().field()) throw MismatchError("monomial map scales span several fields");
        if (d.is_zero()) throw DomainError("monomial map scales must be nonzero");
    }
}

MonomialMap MonomialMap::identity(const Field& field, std::size_t n) {
    return {Permutation::identity(n), std::vector<Scalar>(n, field.one())};
}

MonomialMap MonomialMap::diagonal(std::vector<Scalar> scales) {
    const std::size_t n = scales.size();
    return {Permutation::identity(n), std::move(scales)};
}

MonomialMap MonomialMap::permutation(const Field& field, Permutation sigma) {
    const std::size_t n = sigma.size();
    return {std::move(sigma), std::vector<Scalar>(n, field.one())};
}

bool MonomialMap::is_identity() const {
    return sigma_.is_identity() && std::all_of(scales_.begin(), scales_.end(), [](const Scalar& s) { return s.is_one(); });
}

Matrix MonomialMap::matrix() const {
    Matrix m(field(), size(), size());
    for (std::size_t i = 0; i < size(); ++i) m(sigma_(i), i) = scales_[i];
    return m;
}

std::string MonomialMap::to_string() const {
    std::ostringstream os;
    os << sigma_.cycle_string() << " diag(";
    for (std::size_t i = 0; i < scales_.size(); ++i) os << (i ? ", " : "") << scales_[i].to_string();
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const MonomialMap& a, const MonomialMap& b) {
    if (auto c = a.sigma_ <=> b.sigma_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.scales_.begin(), a.scales_.end(), b.scales_.begin(),
                                                  b.scales_.end());
}

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
    if (outer.size() != inner.size()) throw MismatchError("compose: dimension mismatch");
    if (outer.field() != inner.field()) throw MismatchError("compose: field mismatch");
    const std::size_t n = inner.size();
    std::vector<Scalar> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(outer.scales()[inner.sigma()(i)] * inner.scales()[i]);
    return {outer.sigma() * inner.sigma(), std::move(d)};
}

MonomialMap inverse(const MonomialMap& g) {
    const std::size_t n = g.size();
    std::vector<Scalar> d(n);
    for (std::size_t i = 0; i < n; ++i) d[g.sigma()(i)] = g.scales()[i].inverse();
    return {g.sigma().inverse(), std::move(d)};
}

Matrix permutation_matrix(const Field& field, const Permutation& sigma) {
    return MonomialMap::permutation(field, sigma).matrix();
}

Matrix star_product(const Matrix& p) {
    const std::size_t n = p.cols();
    Matrix out(p.field(), p.rows(), n * (n - 1) / 2);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++col) {
            for (std::size_t k = 0; k < p.rows(); ++k) out(k, col) = p(k, i) * p(k, j);
        }
    }
    return out;
}

}  // namespace evoalg
