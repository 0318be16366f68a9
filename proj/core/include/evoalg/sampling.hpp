#ifndef EVOALG_SAMPLING_HPP
#define EVOALG_SAMPLING_HPP

#include <random>
#include <vector>

#include "evoalg/algebra.hpp"

namespace evoalg {

/// All draws reduce raw mt19937_64 output with `%`, so a seed gives the same
/// matrices on every platform.
using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t bound);

/// Nonzero rational num/den with |num| <= max_abs and 1 <= den <= max_abs.
Scalar random_nonzero_rational(const Field& field, Rng& rng, std::uint64_t max_abs = 9);

/// Uniform n x n matrix over GF(p).
Matrix random_prime_field_matrix(const Field& field, std::size_t n, Rng& rng);

/// Entries zero with probability 1/3, otherwise +-q * zeta^e with q a small
/// positive rational. Over Q(zeta_m) every such entry is a rational times a
/// root of unity, which keeps k-th root extraction decidable.
Matrix random_cyclotomic_monomial_matrix(const Field& field, std::size_t n, Rng& rng);

/// Random 0/1 matrix with entries 1 with probability 1/2, over `field`.
Matrix random_zero_one_matrix(const Field& field, std::size_t n, Rng& rng);

/// Redraws until the determinant is nonzero.
template <class Gen>
EvolutionAlgebra random_idempotent(Gen&& gen) {
    for (;;) {
        EvolutionAlgebra a(gen());
        if (a.is_idempotent()) return a;
    }
}

/// Permutation of {0..n-1} with at least two cycles (n >= 2), drawn uniformly
/// among such permutations by rejection.
Permutation random_multi_cycle_permutation(std::size_t n, Rng& rng);

/// A with a_{pi(j) j} random nonzero rationals and zeros elsewhere.
Matrix weighted_permutation_matrix(const Field& field, const Permutation& pi, Rng& rng);

}  // namespace evoalg

#endif  // EVOALG_SAMPLING_HPP
