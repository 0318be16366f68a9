#include "support.hpp"

using namespace testing;

namespace {

std::uint64_t brute_permanent(const std::vector<std::vector<int>>& p) {
    std::uint64_t total = 0;
    for (const auto& s : all_permutations(p.size())) {
        bool ok = true;
        for (std::size_t j = 0; j < p.size() && ok; ++j) ok = p[s(j)][j] != 0;
        total += ok;
    }
    return total;
}

std::vector<Permutation> brute_automorphisms(const std::vector<std::vector<int>>& adj) {
    std::vector<Permutation> out;
    for (const auto& s : all_permutations(adj.size())) {
        bool ok = true;
        for (std::size_t i = 0; i < adj.size() && ok; ++i)
            for (std::size_t j = 0; j < adj.size() && ok; ++j) ok = adj[i][j] == adj[s(i)][s(j)];
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<std::vector<int>> random_pattern(std::size_t n, Rng& rng, std::uint64_t density) {
    std::vector<std::vector<int>> p(n, std::vector<int>(n));
    for (auto& row : p)
        for (auto& x : row) x = draw(rng, 100) < density ? 1 : 0;
    return p;
}

Matrix pattern_matrix(const std::vector<std::vector<int>>& p) {
    std::vector<std::vector<long long>> rows;
    for (const auto& r : p) rows.emplace_back(r.begin(), r.end());
    return ints(Q(), rows);
}

}  // namespace

TEST_CASE("digraph of a structure matrix") {
    const Field q = Q();
    const Digraph k3 = graph_of(complete_graph_algebra(3, q).structure());
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK_FALSE(k3.has_loop(i));
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(k3.has_edge(i, j));
    }
    const Digraph a1c = graph_of(two_param_algebra(3, q.one(), q.from_int(2)).structure());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(a1c.has_edge(i, j));
    const Digraph cyc = graph_of(cycle_algebra(3, q).structure());
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(cyc.out_degree(j) == 1);
        CHECK(cyc.in_degree(j) == 1);
    }
    CHECK(graph_of(cycle_algebra(3, q).structure()).has_edge(1, 0));
}

TEST_CASE("permutation operations") {
    CHECK(Permutation::from_cycles(4, {{1, 2}, {3, 4}}).order() == 2);
    CHECK(Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}}).order() == 6);
    const Permutation c = Permutation::from_cycles(3, {{1, 2, 3}});
    const Permutation t = Permutation::from_cycles(3, {{1, 2}});
    CHECK(c * t == Permutation::from_cycles(3, {{1, 3}}));
    CHECK((c * t)(0) == c(t(0)));
    CHECK(c.inverse() == Permutation::from_cycles(3, {{1, 3, 2}}));
    CHECK(c.cycle_string() == "(1 2 3)");
    CHECK(Permutation::identity(3).cycle_string() == "()");
    CHECK(Permutation::from_one_based({2, 3, 1}) == c);
    CHECK(c.one_based() == std::vector<int>{2, 3, 1});
    CHECK_THROWS(Permutation::from_one_based({1, 1, 2}));
    CHECK_THROWS(c * Permutation::identity(4));
}

TEST_CASE("graph automorphism examples") {
    const auto dir3 = Digraph::from_adjacency({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(graph_automorphisms(dir3).size() == 3);
    CHECK(graph_automorphisms(Digraph::from_adjacency(cycle_graph(5))).size() == 10);
    CHECK(graph_automorphisms(Digraph::from_adjacency(complete_graph(4))).size() == 24);
    CHECK(graph_automorphisms(Digraph::from_adjacency(path_graph(4))).size() == 2);
}

TEST_CASE("graph automorphisms match brute force over S_n") {
    Rng rng(41);
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = 1 + draw(rng, 6);
        auto adj = random_pattern(n, rng, t % 3 == 0 ? 20 : 50);
        if (t % 4 == 0)  // symmetric graphs carry more symmetry
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < i; ++j) adj[i][j] = adj[j][i];
        const auto got = graph_automorphisms(Digraph::from_adjacency(adj));
        CHECK(got == brute_automorphisms(adj));
    }
}

TEST_CASE("graph automorphisms form a group and commute with the pattern") {
    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + draw(rng, 5);
        auto adj = random_pattern(n, rng, 40);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) adj[i][j] = adj[j][i];
        const auto auts = graph_automorphisms(Digraph::from_adjacency(adj));
        CHECK(std::find(auts.begin(), auts.end(), Permutation::identity(n)) != auts.end());
        for (const auto& s : auts) {
            CHECK(std::binary_search(auts.begin(), auts.end(), s.inverse()));
            for (const auto& u : auts) CHECK(std::binary_search(auts.begin(), auts.end(), s * u));
        }
        // sigma is an automorphism iff P_sigma A = A P_sigma on the 0/1 pattern
        const Matrix a = pattern_matrix(adj);
        for (const auto& s : all_permutations(n)) {
            const Matrix p = permutation_matrix(Q(), s);
            const bool commutes = p * a == a * p;
            CHECK(commutes == std::binary_search(auts.begin(), auts.end(), s));
        }
    }
}

TEST_CASE("transversal examples") {
    const Field q = Q();
    CHECK(transversals(Matrix::identity(q, 3)) == std::vector<Permutation>{Permutation::identity(3)});
    CHECK(transversals(cycle_algebra(3, q).structure()) ==
          std::vector<Permutation>{Permutation::from_cycles(3, {{1, 2, 3}})});
    CHECK(transversals(complete_graph_algebra(3, q).structure()) ==
          std::vector<Permutation>{Permutation::from_cycles(3, {{1, 2, 3}}), Permutation::from_cycles(3, {{1, 3, 2}})});
    CHECK(transversals(ints(q, {{1, 1}, {0, 0}})).empty());
}

TEST_CASE("transversal count equals the permanent") {
    Rng rng(47);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 1 + draw(rng, 6);
        const auto p = random_pattern(n, rng, 30 + draw(rng, 50));
        const Matrix a = pattern_matrix(p);
        const auto ts = transversals(a);
        CHECK(ts.size() == brute_permanent(p));
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        for (const auto& tau : ts)
            for (std::size_t j = 0; j < n; ++j) CHECK(p[tau(j)][j] == 1);
    }
}

TEST_CASE("minimum transversal order") {
    const Field q = Q();
    CHECK(min_transversal_order(two_param_algebra(4, q.one(), q.from_int(2)).structure()) == 1);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(min_transversal_order(cycle_algebra(n, q).structure()) == n);
    CHECK(min_transversal_order(complete_graph_algebra(3, q).structure()) == 3);
    CHECK(min_transversal_order(complete_graph_algebra(4, q).structure()) == 2);
    CHECK_THROWS_AS(min_transversal_order(ints(q, {{1, 1}, {0, 0}})), SingularError);
}

TEST_CASE("t_A is invariant under relabeling") {
    Rng rng(53);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + draw(rng, 4);
        const auto p = random_pattern(n, rng, 45);
        const Matrix a = pattern_matrix(p);
        if (transversals(a).empty()) continue;
        std::uint64_t brute = 0;
        for (const auto& tau : transversals(a)) brute = brute == 0 ? tau.order() : std::min(brute, tau.order());
        CHECK(min_transversal_order(a) == brute);
        const auto perms = all_permutations(n);
        const Matrix s = permutation_matrix(Q(), perms[draw(rng, perms.size())]);
        CHECK(min_transversal_order(s * a * s.transpose()) == brute);
    }
}
