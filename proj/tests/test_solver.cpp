#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::vector<Scalar>> scale_sets(const SolveOutcome& o) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& m : o.maps) out.push_back(m.scales());
    return out;
}

// Diagonal automorphisms over GF(p) by trying every d in (GF(p)*)^n.
std::size_t brute_diagonal_count(const EvolutionAlgebra& a) {
    const auto units = a.field().nonzero_elements();
    const std::size_t n = a.dimension();
    std::vector<std::size_t> idx(n, 0);
    std::size_t count = 0;
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const Scalar& x = a.structure()(i, j);
                if (!x.is_zero()) ok = units[idx[j]] * units[idx[j]] == units[idx[i]];
            }
        count += ok;
        std::size_t k = 0;
        while (k < n && ++idx[k] == units.size()) idx[k++] = 0;
        if (k == n) break;
    }
    return count;
}

EvolutionAlgebra random_gf(std::uint64_t p, std::size_t n, Rng& rng) {
    const Field f = GF(p);
    return random_idempotent([&] { return random_prime_field_matrix(f, n, rng); });
}

}  // namespace

TEST_CASE("solve_monomial examples") {
    const Field q = Q();
    const EvolutionAlgebra k3 = complete_graph_algebra(3, q);
    const auto o = solve_monomial(k3, k3, Permutation::identity(3));
    CHECK(o.status == SolveStatus::Complete);
    CHECK(scale_sets(o) == std::vector<std::vector<Scalar>>{scalars(q, {1, 1, 1})});

    const EvolutionAlgebra one = alg(q, {{1}});
    CHECK(scale_sets(solve_monomial(one, one, Permutation::identity(1))) ==
          std::vector<std::vector<Scalar>>{scalars(q, {1})});

    // maps E(A) -> E(B) satisfy B P^(2) = P A
    const EvolutionAlgebra ones = cycle_algebra(3, q);
    const EvolutionAlgebra b128 = cycle_algebra(3, q, scalars(q, {128, 1, 1}));
    const auto fwd = solve_monomial(ones, b128, Permutation::identity(3));
    CHECK(scale_sets(fwd) == std::vector<std::vector<Scalar>>{rationals(q, {"1/16", "1/2", "1/4"})});
    const auto back = solve_monomial(b128, ones, Permutation::identity(3));
    CHECK(scale_sets(back) == std::vector<std::vector<Scalar>>{scalars(q, {16, 2, 4})});
    for (const auto& m : fwd.maps) CHECK(verify_map(ones.structure(), b128.structure(), m));
    for (const auto& m : back.maps) CHECK(verify_map(b128.structure(), ones.structure(), m));

    // a sigma that is not a pattern isomorphism has no solution
    CHECK(solve_monomial(ones, ones, Permutation::from_cycles(3, {{1, 2}})).status == SolveStatus::NoSolution);
}

TEST_CASE("solve_monomial agrees with brute force over every sigma") {
    Rng rng(61);
    for (int t = 0; t < 40; ++t) {
        const std::uint64_t p = t % 2 ? 5 : 7;
        const std::size_t n = 2 + t % 2;
        const EvolutionAlgebra a = random_gf(p, n, rng);
        // B is a random monomial image of A, so an isomorphism exists
        const auto perms = all_permutations(n);
        std::vector<Scalar> d;
        for (std::size_t i = 0; i < n; ++i) d.push_back(a.field().from_residue(1 + draw(rng, p - 1)));
        const MonomialMap g(perms[draw(rng, perms.size())], d);
        const EvolutionAlgebra b(transport_structure(a.structure(), g));
        const auto units = a.field().nonzero_elements();
        bool found_g = false;
        for (const auto& s : perms) {
            const auto o = solve_monomial(a, b, s);
            REQUIRE(o.status != SolveStatus::Indeterminate);
            std::vector<MonomialMap> brute;
            std::vector<std::size_t> idx(n, 0);
            for (;;) {
                std::vector<Scalar> dd;
                for (auto k : idx) dd.push_back(units[k]);
                MonomialMap m(s, dd);
                if (verify_map(a.structure(), b.structure(), m)) brute.push_back(m);
                std::size_t k = 0;
                while (k < n && ++idx[k] == units.size()) idx[k++] = 0;
                if (k == n) break;
            }
            std::sort(brute.begin(), brute.end());
            CHECK(o.maps == brute);
            CHECK((o.status == SolveStatus::Complete) == !brute.empty());
            found_g |= std::find(o.maps.begin(), o.maps.end(), g) != o.maps.end();
        }
        CHECK(found_g);
    }
}

TEST_CASE("diagonal subgroup examples") {
    const Field z3 = Cyc(3);
    const auto d = diagonal_subgroup(complete_graph_algebra(2, z3));
    CHECK(d.lattice.order == 3);
    const MonomialMap xi = MonomialMap::diagonal({z3.zeta(), z3.zeta() * z3.zeta()});
    CHECK(std::find(d.elements.begin(), d.elements.end(), xi) != d.elements.end());
    CHECK(close_generators(z3, 2, {xi}).elements() == d.elements);

    CHECK(diagonal_subgroup(cycle_algebra(3, Cyc(7))).lattice.order == 7);
    CHECK(diagonal_subgroup(cycle_algebra(3, Cyc(7))).t_a == 3);

    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        const EvolutionAlgebra a = random_idempotent([&] { return random_cyclotomic_monomial_matrix(Q(), 3, rng); });
        CHECK(diagonal_subgroup(a).lattice.order == 1);
    }
}

TEST_CASE("diagonal lattice matches brute force over GF(p)") {
    Rng rng(71);
    for (int t = 0; t < 60; ++t) {
        const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11, 13}[t % 5];
        const EvolutionAlgebra a = random_gf(p, 2 + t % 3, rng);
        const auto d = diagonal_subgroup(a);
        CHECK(d.lattice.order == brute_diagonal_count(a));
        CHECK(d.elements.size() == d.lattice.order);
        std::uint64_t prod = 1;
        for (auto o : d.lattice.factor_orders) prod *= o;
        CHECK(prod == d.lattice.order);
        // every lattice generator solves the congruences
        for (const auto& g : d.generator_maps) CHECK(verify_map(a.structure(), a.structure(), g));
        for (const auto& x : d.elements) {
            const auto o = element_order(x);
            CHECK(o % 2 == 1);
            CHECK(((std::uint64_t{1} << d.t_a) - 1) % o == 0);
        }
    }
}

TEST_CASE("automorphism group examples") {
    const Field q = Q();
    CHECK(automorphism_group(complete_graph_algebra(4, q)).group.order() == 24);
    CHECK(automorphism_group(cycle_algebra(3, Cyc(7))).group.order() == 21);
    CHECK(automorphism_group(complete_graph_algebra(2, q)).group.order() == 2);
    const auto c3 = automorphism_group(cycle_algebra(3, q));
    CHECK(c3.group.order() == 3);
    CHECK(c3.kernel_order == 1);
    CHECK_THROWS_AS(automorphism_group(alg(q, {{1, 1}, {1, 1}})), SingularError);
}

TEST_CASE("automorphism group equals the brute-force oracle") {
    Rng rng(73);
    for (int t = 0; t < 90; ++t) {
        const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[t % 3];
        const EvolutionAlgebra a = random_gf(p, 2 + (t / 3) % 2, rng);
        const auto g = automorphism_group(a, {static_cast<unsigned>(1 + t % 4)});
        CHECK_FALSE(g.partial);
        CHECK(g.group.closed());
        CHECK(g.group.elements() == brute_force_automorphisms(a).elements());
        for (const auto& m : g.group.elements()) CHECK(verify_map(a.structure(), a.structure(), m));
    }
}

TEST_CASE("quotient structure of the automorphism group") {
    Rng rng(79);
    for (int t = 0; t < 40; ++t) {
        const EvolutionAlgebra a = random_gf(t % 2 ? 7 : 13, 3, rng);
        const auto g = automorphism_group(a);
        const auto kernel = g.group.kernel();
        CHECK(kernel == diagonal_subgroup(a).elements);
        for (const auto& x : g.group.elements())
            for (const auto& k : kernel) CHECK(compose(compose(x, k), inverse(x)).is_diagonal());
        for (const auto& s : g.image)
            CHECK(std::find(g.graph_automorphisms.begin(), g.graph_automorphisms.end(), s) != g.graph_automorphisms.end());
        CHECK(quotient_embedding_check(g.group, a).ok());
    }
}

TEST_CASE("0/1 matrices: every graph automorphism lifts") {
    Rng rng(83);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 2 + draw(rng, 4);
        const EvolutionAlgebra a = random_idempotent([&] { return random_zero_one_matrix(Q(), n, rng); });
        const auto g = automorphism_group(a);
        CHECK(g.group.order() == g.kernel_order * g.graph_automorphisms.size());
    }
}

TEST_CASE("verify_map examples") {
    const Field q = Q();
    const Matrix k2 = ints(q, {{0, 1}, {1, 0}});
    CHECK(verify_map(k2, k2, MonomialMap::identity(q, 2)));
    CHECK(verify_map(k2, k2, MonomialMap::permutation(q, Permutation::from_one_based({2, 1}))));
    CHECK_FALSE(verify_map(k2, k2, MonomialMap::diagonal(scalars(q, {2, 1}))));
    const auto c = check_map(k2, k2, MonomialMap::diagonal(scalars(q, {2, 1})));
    CHECK_FALSE(c.bp2_eq_pa);
    CHECK(c.b_pstarp_zero);
}

TEST_CASE("isomorphism examples") {
    const Field q = Q();
    const auto e01 = two_param_algebra(4, q.zero(), q.one());
    const auto e12 = two_param_algebra(4, q.one(), q.from_int(2));
    const auto e13 = two_param_algebra(4, q.one(), q.from_int(3));
    const auto e24 = two_param_algebra(4, q.from_int(2), q.from_int(4));
    CHECK(isomorphism(e01, e12).status == IsoStatus::NonIsomorphic);
    CHECK(isomorphism(e12, e13).status == IsoStatus::NonIsomorphic);
    const auto r = isomorphism(e24, e12);
    REQUIRE(r.status == IsoStatus::Isomorphic);
    CHECK(r.certificate->map.sigma().is_identity());
    CHECK(r.certificate->map.scales() == scalars(q, {2, 2, 2, 2}));
    CHECK(r.certificate->checked.ok());

    const auto self = isomorphism(e12, e12);
    REQUIRE(self.status == IsoStatus::Isomorphic);
    CHECK(self.certificate->map.is_identity());
    CHECK_THROWS(isomorphism(e12, complete_graph_algebra(3, q)));
}

TEST_CASE("isomorphism witnesses compose") {
    Rng rng(89);
    for (const Field& f : {GF(7), Q(), Cyc(3)}) {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = 3;
            const EvolutionAlgebra a = f.is_prime_field()
                                           ? random_gf(7, n, rng)
                                           : random_idempotent([&] { return random_cyclotomic_monomial_matrix(f, n, rng); });
            auto random_map = [&] {
                const auto perms = all_permutations(n);
                std::vector<Scalar> d;
                for (std::size_t i = 0; i < n; ++i) d.push_back(f.is_prime_field() ? f.from_residue(1 + draw(rng, 6))
                                                                                   : random_nonzero_rational(f, rng));
                return MonomialMap(perms[draw(rng, perms.size())], d);
            };
            const EvolutionAlgebra b(transport_structure(a.structure(), random_map()));
            const EvolutionAlgebra c(transport_structure(b.structure(), random_map()));
            const auto ab = isomorphism(a, b), bc = isomorphism(b, c);
            REQUIRE(ab.status == IsoStatus::Isomorphic);
            REQUIRE(bc.status == IsoStatus::Isomorphic);
            CHECK(verify_map(a.structure(), c.structure(), compose(bc.certificate->map, ab.certificate->map)));
        }
    }
}

TEST_CASE("brute-force oracle examples") {
    CHECK(brute_force_automorphisms(complete_graph_algebra(2, GF(7))).order() == 6);
    const auto id5 = brute_force_automorphisms(EvolutionAlgebra(Matrix::identity(GF(5), 2)));
    CHECK(id5.order() == 2);
    CHECK(id5.kernel().size() == 1);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) CHECK(brute_force_automorphisms(alg(GF(p), {{1}})).order() == 1);
    CHECK_THROWS(brute_force_automorphisms(alg(GF(17), {{1}})));
    CHECK_THROWS(brute_force_automorphisms(complete_graph_algebra(2, Q())));
}

TEST_CASE("every automorphism over small fields is monomial") {
    Rng rng(97);
    for (std::uint64_t p : {2, 3}) {
        for (int t = 0; t < 15; ++t) {
            const EvolutionAlgebra a = random_gf(p, 1 + t % 2, rng);
            const auto gen = brute_force_general_automorphisms(a);
            CHECK(gen.all_monomial);
            CHECK(gen.automorphisms.size() == automorphism_group(a).group.order());
        }
    }
}
