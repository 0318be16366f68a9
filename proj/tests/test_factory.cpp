#include "support.hpp"

#include <filesystem>
#include <fstream>

using namespace testing;

namespace {

std::vector<std::string> labels(const std::vector<Representative>& reps, bool present) {
    std::vector<std::string> out;
    for (const auto& r : reps)
        if (r.algebra.has_value() == present) out.push_back(r.label);
    return out;
}

}  // namespace

TEST_CASE("complete graph algebra") {
    const Field q = Q();
    const auto k4 = complete_graph_algebra(4, q);
    CHECK(k4.det() == q.from_int(-3));
    CHECK(k4.is_idempotent());
    CHECK(complete_graph_algebra(2, q).det() == q.from_int(-1));
    CHECK_THROWS_AS(complete_graph_algebra(3, GF(2)), SingularError);
    CHECK_THROWS_AS(complete_graph_algebra(4, GF(3)), SingularError);
    CHECK(complete_graph_algebra(4, GF(5)).is_idempotent());
}

TEST_CASE("two-parameter algebra") {
    const Field q = Q();
    CHECK(two_param_algebra(4, q.one(), q.from_int(2)).det() == q.from_int(-7));
    CHECK_THROWS_AS(two_param_algebra(3, q.one(), q.one()), SingularError);
    CHECK_THROWS_AS(two_param_algebra(3, q.one(), q.parse_scalar("-1/2")), SingularError);
    Rng rng(113);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + draw(rng, 5);
        const Scalar a = random_scalar(q, rng), b = random_scalar(q, rng);
        const Scalar expect = (a + q.from_int(static_cast<long long>(n) - 1) * b) * (a - b).pow(n - 1);
        if (expect.is_zero() && n > 1) {
            CHECK_THROWS_AS(two_param_algebra(n, a, b), SingularError);
        } else if (!expect.is_zero()) {
            CHECK(two_param_algebra(n, a, b).det() == expect);
        }
    }
}

TEST_CASE("cycle algebra") {
    const Field q = Q();
    CHECK(cycle_algebra(3, q).structure() == ints(q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
    CHECK(cycle_algebra(3, q, scalars(q, {128, 1, 1})).structure() == ints(q, {{0, 0, 1}, {128, 0, 0}, {0, 1, 0}}));
    const auto one = cycle_algebra(1, q, scalars(q, {5}));
    CHECK(one.structure() == ints(q, {{5}}));
    CHECK(one.is_idempotent());
    CHECK_THROWS_AS(cycle_algebra(2, q, scalars(q, {1, 0})), DomainError);
    CHECK_THROWS_AS(cycle_algebra(2, q, scalars(q, {1})), MismatchError);
}

TEST_CASE("Frucht lift") {
    const Field q = Q();
    const auto k4 = frucht_lift(complete_graph(4), q);
    CHECK(k4.shift == 0);
    CHECK(k4.algebra.structure() == complete_graph_algebra(4, q).structure());

    // two vertices joined by an edge plus an isolated vertex: the isolated
    // vertex makes B singular, so the smallest shift is 2 (B + I is singular too)
    const std::vector<std::vector<int>> edge_plus_point{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
    const auto lifted = frucht_lift(edge_plus_point, q);
    CHECK(lifted.shift == 2);
    CHECK(lifted.algebra.is_idempotent());
    CHECK(determinant(ints(q, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})).is_zero());

    const auto c5 = frucht_lift(cycle_graph(5), q);
    CHECK(c5.shift == 0);
    CHECK(automorphism_group(c5.algebra).group.order() == 10);

    for (const auto& g : {cycle_graph(5), path_graph(4), complete_graph(4), edge_plus_point, cycle_graph(6)}) {
        for (std::uint64_t min_shift : {0, 1, 3}) {
            const auto l = frucht_lift(g, q, min_shift);
            CHECK(l.shift >= min_shift);
            CHECK(l.algebra.is_idempotent());
            CHECK(graph_automorphisms(l.algebra.graph()) == graph_automorphisms(Digraph::from_adjacency(g)));
            // the shift chosen is the smallest admissible one
            for (std::uint64_t m = min_shift; m < l.shift; ++m) {
                Matrix b(q, g.size(), g.size());
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (std::size_t j = 0; j < g.size(); ++j)
                        b(i, j) = q.from_int(g[i][j] + (i == j ? static_cast<long long>(m) : 0));
                CHECK(determinant(b).is_zero());
            }
        }
    }
    CHECK_THROWS_AS(frucht_lift(complete_graph(3), GF(5)), DomainError);
    CHECK_THROWS_AS(frucht_lift({{0, 1}, {0, 0}}, q), DomainError);
}

TEST_CASE("representatives of S_n-algebras") {
    const Field q = Q();
    const auto n3 = sn_representatives(3, q, scalars(q, {2}));
    CHECK(labels(n3, true) == std::vector<std::string>{"A(1,c) c=2", "K_3"});
    CHECK(labels(n3, false) == std::vector<std::string>{"K_2+(1)"});

    const auto n4 = sn_representatives(4, q, scalars(q, {2}));
    CHECK(labels(n4, true) == std::vector<std::string>{"A(1,c) c=2", "K_4"});

    const auto n1 = sn_representatives(1, q);
    REQUIRE(n1.size() == 1);
    REQUIRE(n1[0].algebra.has_value());
    CHECK(n1[0].algebra->structure() == ints(q, {{1}}));

    // over Q(zeta_3), x^3 - 1 splits: K_2 drops out for n = 2, K_2+(1) appears for n = 3
    const Field z3 = Cyc(3);
    const auto n2 = labels(sn_representatives(2, z3), false);
    CHECK(std::find(n2.begin(), n2.end(), "K_2") != n2.end());
    CHECK(labels(sn_representatives(2, Q()), true).back() == "K_2");
    CHECK(labels(sn_representatives(3, z3), true).size() == 5);

    // characteristic dividing n - 1 removes K_n
    const auto g3 = sn_representatives(4, GF(3));
    for (const auto& l : labels(g3, true)) CHECK(l != "K_4");

    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& r : sn_representatives(n, q))
            if (r.algebra) {
                CHECK(r.algebra->is_idempotent());
                CHECK(automorphism_group(*r.algebra).group.order() ==
                      GroupTarget::symmetric(n).order());
            }
}

TEST_CASE("representatives are pairwise non-isomorphic") {
    for (const Field& f : {Q(), Cyc(3)}) {
        for (std::size_t n = 2; n <= 4; ++n) {
            std::vector<EvolutionAlgebra> algs;
            for (const auto& r : sn_representatives(n, f))
                if (r.algebra) algs.push_back(*r.algebra);
            for (std::size_t i = 0; i < algs.size(); ++i)
                for (std::size_t j = i + 1; j < algs.size(); ++j)
                    CHECK(isomorphism(algs[i], algs[j]).status == IsoStatus::NonIsomorphic);
        }
    }
}

TEST_CASE("cycle normalizer") {
    const Field q = Q();
    const auto ones = cycle_normalizer(scalars(q, {1, 1, 1}));
    REQUIRE(ones.status == SolveStatus::Complete);
    CHECK(std::find(ones.maps.begin(), ones.maps.end(), MonomialMap::identity(q, 3)) != ones.maps.end());

    const auto b = cycle_normalizer(scalars(q, {128, 1, 1}));
    REQUIRE(b.status == SolveStatus::Complete);
    REQUIRE(b.maps.size() == 1);
    CHECK(b.maps[0].scales() == rationals(q, {"1/16", "1/2", "1/4"}));
    const Matrix bm = cycle_algebra(3, q, scalars(q, {128, 1, 1})).structure();
    const Matrix d = b.maps[0].matrix();
    CHECK(bm * d.entrywise_square() == d * cycle_algebra(3, q).structure());

    const Field z7 = Cyc(7);
    CHECK(cycle_normalizer(scalars(z7, {1, 1, 1})).maps.size() == 7);
    CHECK(cycle_normalizer(scalars(q, {3, 1, 1})).status == SolveStatus::NoSolution);
}

TEST_CASE("cycle algebras with solvable normalizer are isomorphic to the plain cycle") {
    Rng rng(127);
    const Field z7 = Cyc(7);
    int solvable = 0;
    for (int t = 0; t < 30; ++t) {
        std::vector<Scalar> b;
        for (int i = 0; i < 3; ++i) b.push_back(random_nonzero_rational(z7, rng, 4));
        if (t % 3 == 0) b = {z7.from_int(128), z7.one(), z7.one()};
        const auto norm = cycle_normalizer(b);
        REQUIRE(norm.status != SolveStatus::Indeterminate);
        const auto iso = isomorphism(cycle_algebra(3, z7, b), cycle_algebra(3, z7));
        CHECK((iso.status == IsoStatus::Isomorphic) == (norm.status == SolveStatus::Complete));
        solvable += norm.status == SolveStatus::Complete;
    }
    CHECK(solvable > 0);
}

TEST_CASE("family specs") {
    const Field q = Q();
    CHECK(build_family(FamilySpec::parse("complete:n=4"), q).algebra.structure() ==
          complete_graph_algebra(4, q).structure());
    CHECK_THROWS_AS(build_family(FamilySpec::parse("twoparam:n=3,a=1,b=1"), q), SingularError);
    CHECK(build_family(FamilySpec::parse("twoparam:n=4,a=1,b=2"), q).algebra.det() == q.from_int(-7));
    CHECK(build_family(FamilySpec::parse("cycle:n=3,b=128;1;1"), q).algebra.structure() ==
          cycle_algebra(3, q, scalars(q, {128, 1, 1})).structure());
    CHECK(build_family(FamilySpec::parse("sn:n=4,index=3"), q).algebra.structure() ==
          complete_graph_algebra(4, q).structure());
    CHECK_THROWS_AS(FamilySpec::parse("nonsense"), ParseError);
    CHECK_THROWS_AS(build_family(FamilySpec::parse("complete:m=4"), q), ParseError);
    CHECK_THROWS_AS(build_family(FamilySpec::parse("bogus:n=4"), q), ParseError);

    const auto path = std::filesystem::temp_directory_path() / "evoalg_test_c5.json";
    write_text_file(path.string(), dump(graph_to_json(cycle_graph(5))));
    const auto built = build_family(FamilySpec::parse("frucht:" + path.string()), q);
    CHECK(built.algebra.dimension() == 5);
    bool has_shift = false;
    for (const auto& [k, v] : built.meta) has_shift |= k == "shift" && v == "0";
    CHECK(has_shift);
    std::filesystem::remove(path);
}
