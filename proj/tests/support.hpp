#pragma once

#include <evoalg/census.hpp>
#include <evoalg/digraph.hpp>
#include <evoalg/error.hpp>
#include <evoalg/factory.hpp>
#include <evoalg/groups.hpp>
#include <evoalg/io.hpp>
#include <evoalg/matrix.hpp>
#include <evoalg/monomial.hpp>
#include <evoalg/sampling.hpp>
#include <evoalg/scalars.hpp>
#include <evoalg/smith.hpp>
#include <evoalg/solver.hpp>

#include <doctest.h>

namespace testing {

using namespace evoalg;

inline Field Q() { return Field(FieldDescriptor::rationals()); }
inline Field GF(std::uint64_t p) { return Field(FieldDescriptor::prime_field(p)); }
inline Field Cyc(std::uint64_t m) { return Field(FieldDescriptor::cyclotomic(m)); }

inline Matrix ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
    return Matrix::from_ints(f, rows);
}

inline EvolutionAlgebra alg(const Field& f, const std::vector<std::vector<long long>>& rows) {
    return EvolutionAlgebra(ints(f, rows));
}

inline std::vector<Scalar> scalars(const Field& f, const std::vector<long long>& v) {
    std::vector<Scalar> out;
    for (long long x : v) out.push_back(f.from_int(x));
    return out;
}

inline std::vector<Scalar> rationals(const Field& f, const std::vector<std::string>& v) {
    std::vector<Scalar> out;
    for (const auto& s : v) out.push_back(f.parse_scalar(s));
    return out;
}

/// Random element of any backend: small rationals on each coordinate.
inline Scalar random_scalar(const Field& f, Rng& rng) {
    if (f.is_prime_field()) return f.from_residue(draw(rng, f.characteristic()));
    std::vector<mpq_class> c(f.degree());
    for (auto& q : c) q = mpq_class(static_cast<long>(draw(rng, 19)) - 9, 1 + static_cast<long>(draw(rng, 5)));
    return f.from_coefficients(c);
}

inline Scalar random_nonzero(const Field& f, Rng& rng) {
    for (;;) {
        Scalar s = random_scalar(f, rng);
        if (!s.is_zero()) return s;
    }
}

/// All n! permutations in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i) + 1;
    std::vector<Permutation> out;
    do out.push_back(Permutation::from_one_based(img));
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

inline std::vector<std::vector<int>> pattern(const Matrix& a) {
    std::vector<std::vector<int>> p(a.rows(), std::vector<int>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) p[i][j] = a(i, j).is_zero() ? 0 : 1;
    return p;
}

inline std::vector<std::vector<int>> cycle_graph(std::size_t n) {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][(i + 1) % n] = g[(i + 1) % n][i] = 1;
    return g;
}

inline std::vector<std::vector<int>> path_graph(std::size_t n) {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    return g;
}

inline std::vector<std::vector<int>> complete_graph(std::size_t n) {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 1));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 0;
    return g;
}

}  // namespace testing
