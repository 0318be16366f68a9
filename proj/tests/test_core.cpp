#include "support.hpp"

using namespace testing;

namespace {

// Leibniz expansion, independent of the elimination code.
Scalar leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    Scalar total = m.field().zero();
    for (const auto& s : all_permutations(n)) {
        Scalar term = m.field().one();
        for (std::size_t j = 0; j < n; ++j) term *= m(s(j), j);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += s(i) > s(j);
        total += inversions % 2 ? -term : term;
    }
    return total;
}

Matrix random_matrix(const Field& f, std::size_t n, Rng& rng, bool sparse = false) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = sparse && draw(rng, 3) == 0 ? f.zero() : random_scalar(f, rng);
    return m;
}

MonomialMap random_monomial(const Field& f, std::size_t n, Rng& rng) {
    auto perms = all_permutations(n);
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(random_nonzero(f, rng));
    return MonomialMap(perms[draw(rng, perms.size())], d);
}

}  // namespace

TEST_CASE("determinant examples") {
    const Field q = Q();
    CHECK(complete_graph_algebra(4, q).det() == q.from_int(-3));
    CHECK(two_param_algebra(4, q.one(), q.from_int(2)).det() == q.from_int(-7));
    CHECK(determinant(Matrix::identity(q, 5)) == q.one());
    CHECK(determinant(ints(q, {{1, 1}, {1, 1}})).is_zero());
}

TEST_CASE("determinant agrees with Leibniz expansion") {
    Rng rng(3);
    for (const Field& f : {Q(), GF(5), GF(2), Cyc(3), Cyc(7)}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int t = 0; t < 6; ++t) {
                const Matrix m = random_matrix(f, n, rng, t % 2 == 1);
                CHECK(determinant(m) == leibniz_det(m));
                CHECK((rank(m) == n) == !determinant(m).is_zero());
            }
        }
    }
}

TEST_CASE("det K_n formula") {
    for (long long n = 2; n <= 8; ++n) {
        const Scalar d = complete_graph_algebra(n, Q()).det();
        CHECK(d == Q().from_int((n % 2 ? 1 : -1) * (n - 1)));
    }
}

TEST_CASE("algebra construction examples") {
    const Field q = Q();
    const EvolutionAlgebra one = alg(q, {{1}});
    CHECK(one.is_idempotent());
    CHECK(one.det() == q.one());
    const EvolutionAlgebra k2 = alg(q, {{0, 1}, {1, 0}});
    CHECK(k2.det() == q.from_int(-1));
    CHECK_FALSE(alg(q, {{1, 1}, {1, 1}}).is_idempotent());
    CHECK_THROWS_AS(alg(q, {{1, 1}, {1, 1}}).require_idempotent("test"), SingularError);
    CHECK_THROWS(EvolutionAlgebra(Matrix(q, 2, 3)));
}

TEST_CASE("multiplication examples") {
    const Field q = Q();
    const EvolutionAlgebra k2 = alg(q, {{0, 1}, {1, 0}});
    const auto e1 = k2.basis(0), e2 = k2.basis(1);
    CHECK(k2.multiply(e1, e1) == e2);
    CHECK(k2.multiply(e1, e2) == k2.zero());
    CHECK(k2.multiply(e1 + e2, e1 + e2) == e1 + e2);
    const EvolutionAlgebra a = alg(q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    CHECK(a.multiply(a.basis(0), a.basis(2)) == a.zero());
    // e_j^2 is column j
    for (std::size_t j = 0; j < 3; ++j) {
        const auto sq = a.multiply(a.basis(j), a.basis(j));
        for (std::size_t i = 0; i < 3; ++i) CHECK(sq.coords[i] == a.structure()(i, j));
    }
}

TEST_CASE("multiplication is commutative and bilinear") {
    Rng rng(17);
    for (const Field& f : {Q(), GF(7), Cyc(5)}) {
        const std::size_t n = 3;
        const EvolutionAlgebra a(random_matrix(f, n, rng));
        auto element = [&] {
            AlgebraElement x = a.zero();
            for (auto& c : x.coords) c = random_scalar(f, rng);
            return x;
        };
        for (int t = 0; t < 20; ++t) {
            const auto x = element(), y = element(), z = element();
            const Scalar s = random_scalar(f, rng);
            CHECK(a.multiply(x, y) == a.multiply(y, x));
            CHECK(a.multiply(x + y, z) == a.multiply(x, z) + a.multiply(y, z));
            CHECK(a.multiply(x.scaled(s), y) == a.multiply(x, y).scaled(s));
        }
    }
}

TEST_CASE("idempotent iff squares are independent") {
    Rng rng(23);
    const Field f = GF(3);
    for (int t = 0; t < 100; ++t) {
        const EvolutionAlgebra a(random_matrix(f, 3, rng));
        CHECK(a.is_idempotent() == (rank(a.structure()) == 3));
    }
}

TEST_CASE("transport examples") {
    const Field q = Q();
    const Matrix a = ints(q, {{1, 2}, {3, 4}});
    CHECK(transport_structure(a, MonomialMap::identity(q, 2)) == a);

    const Matrix p123 = cycle_algebra(3, q).structure();
    const MonomialMap d = MonomialMap::diagonal(rationals(q, {"1/16", "1/2", "1/4"}));
    const Matrix expect = cycle_algebra(3, q, scalars(q, {128, 1, 1})).structure();
    CHECK(transport_structure(p123, d) == expect);

    const Matrix k2 = ints(q, {{0, 1}, {1, 0}});
    CHECK(transport_structure(k2, MonomialMap::permutation(q, Permutation::from_one_based({2, 1}))) == k2);
    CHECK_THROWS_AS(transport_structure(ints(q, {{1, 1}, {1, 1}}), MonomialMap::identity(q, 2)), SingularError);
}

TEST_CASE("transport round trip and defining identity") {
    Rng rng(29);
    for (const Field& f : {Q(), GF(7), Cyc(3)}) {
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + draw(rng, 3);
            const EvolutionAlgebra a = random_idempotent([&] { return random_matrix(f, n, rng, true); });
            const MonomialMap p = random_monomial(f, n, rng);
            const Matrix b = transport_structure(a.structure(), p);
            CHECK(transport_structure(b, inverse(p)) == a.structure());
            CHECK(b * p.matrix().entrywise_square() == p.matrix() * a.structure());
            CHECK_FALSE(determinant(b).is_zero());
            CHECK(verify_map(a.structure(), b, p));
        }
    }
}
