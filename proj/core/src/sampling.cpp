#include "evoalg/sampling.hpp"

#include <numeric>

#include "evoalg/error.hpp"

namespace evoalg {

std::uint64_t draw(Rng& rng, std::uint64_t bound) { return rng() % bound; }

Scalar random_nonzero_rational(const Field& field, Rng& rng, std::uint64_t max_abs) {
    const long num = static_cast<long>(1 + draw(rng, max_abs));
    const long den = static_cast<long>(1 + draw(rng, max_abs));
    const mpq_class q(draw(rng, 2) ? -num : num, den);
    return field.from_rational(q);
}

Matrix random_prime_field_matrix(const Field& field, std::size_t n, Rng& rng) {
    if (!field.is_prime_field()) throw DomainError("random_prime_field_matrix: needs GF(p)");
    const std::uint64_t p = field.characteristic();
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = field.from_residue(draw(rng, p));
    return m;
}

Matrix random_cyclotomic_monomial_matrix(const Field& field, std::size_t n, Rng& rng) {
    const RootOfUnityGroup mu = field.root_of_unity_group();
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (draw(rng, 3) == 0) continue;
            const Scalar q = random_nonzero_rational(field, rng, 4);
            m(i, j) = q * mu.generator.pow(draw(rng, mu.order));
        }
    }
    return m;
}

Matrix random_zero_one_matrix(const Field& field, std::size_t n, Rng& rng) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (draw(rng, 2)) m(i, j) = field.one();
    return m;
}

Permutation random_multi_cycle_permutation(std::size_t n, Rng& rng) {
    if (n < 2) throw DomainError("random_multi_cycle_permutation: n must be at least 2");
    for (;;) {
        std::vector<std::uint32_t> v(n);
        std::iota(v.begin(), v.end(), 0U);
        for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
        Permutation p(v);
        if (p.cycles().size() >= 2) return p;
    }
}

Matrix weighted_permutation_matrix(const Field& field, const Permutation& pi, Rng& rng) {
    Matrix m(field, pi.size(), pi.size());
    for (std::size_t j = 0; j < pi.size(); ++j) m(pi(j), j) = random_nonzero_rational(field, rng);
    return m;
}

}  // namespace evoalg
