#include "support.hpp"

using namespace testing;

namespace {

std::uint64_t histogram_total(const std::map<std::uint64_t, std::uint64_t>& h) {
    std::uint64_t s = 0;
    for (const auto& [k, v] : h) s += v;
    return s;
}

}  // namespace

TEST_CASE("matrix json round trip") {
    Rng rng(131);
    for (const Field& f : {Q(), GF(7), Cyc(7), Cyc(12)}) {
        Matrix m(f, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_scalar(f, rng);
        const Json j = matrix_to_json(m);
        CHECK(j.at("field") == f.name());
        CHECK(j.at("n") == 3);
        CHECK(matrix_from_json(j) == m);
        CHECK(matrix_from_json(Json::parse(dump(j))) == m);
    }
    const Json j = Json::parse(R"({"field": "Q", "n": 2, "entries": [["1/2", "0"], ["3", "-1"]]})");
    const Matrix m = matrix_from_json(j);
    CHECK(m(0, 0) == Q().parse_scalar("1/2"));
    CHECK(matrix_from_json(j, GF(5))(0, 0) == GF(5).from_int(3));
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"field": "Q", "n": 2, "entries": [["1"]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n": 1, "entries": [["1"]]})")), ParseError);
}

TEST_CASE("permutation and map json") {
    const Permutation p = Permutation::from_one_based({2, 3, 1});
    CHECK(permutation_to_json(p) == Json::array({2, 3, 1}));
    CHECK(permutation_from_json(Json::array({2, 3, 1})) == p);
    CHECK_THROWS_AS(permutation_from_json(Json::array({0, 1})), ParseError);

    const Field z3 = Cyc(3);
    const MonomialMap m(p, {z3.zeta(), z3.one(), -z3.zeta()});
    CHECK(map_from_json(map_to_json(m), z3) == m);

    const Field q = Q();
    const Certificate c{MonomialMap::identity(q, 2), {true, true}};
    const Json cj = certificate_to_json(c);
    CHECK(cj.at("checked").at("BP2_eq_PA") == true);
    CHECK(cj.at("checked").at("B_PstarP_zero") == true);
}

TEST_CASE("graph json") {
    const auto g = cycle_graph(5);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(graph_from_json(Json::parse(R"({"n": 2, "adjacency": [[0,1],[1,0]]})")) ==
          std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "adjacency": [[0,1]]})")), ParseError);
}

TEST_CASE("group json") {
    const auto g = automorphism_group(cycle_algebra(3, Cyc(7))).group;
    const Json j = group_to_json(g);
    CHECK(j.at("order") == 21);
    CHECK(j.at("closed") == true);
    CHECK(j.at("diagonal_order") == 7);
    CHECK(j.at("quotient_order") == 3);
    bool named = false;
    for (const auto& r : j.at("recognized")) named |= r == "C_7⋊C_3";
    CHECK(named);
    CHECK(dump(j) == dump(group_to_json(automorphism_group(cycle_algebra(3, Cyc(7))).group)));
}

TEST_CASE("census mode parsing") {
    CHECK(CensusMode::parse("exhaustive").exhaustive);
    CHECK(CensusMode::parse("random:1000").samples == 1000);
    CHECK(CensusMode::parse("random:12").to_string() == "random:12");
    CHECK_THROWS_AS(CensusMode::parse("random:"), ParseError);
    CHECK_THROWS_AS(CensusMode::parse("random:-3"), ParseError);
    CHECK_THROWS_AS(CensusMode::parse("all"), ParseError);
}

TEST_CASE("census counts") {
    CensusOptions o;
    o.field = FieldDescriptor::prime_field(2);
    o.n = 2;
    o.mode = CensusMode::parse("exhaustive");
    const CensusReport r = run_census(o);
    CHECK(r.candidates == 16);
    CHECK(r.processed == 6);
    CHECK(r.singular == 10);
    CHECK(histogram_total(r.aut_orders) == 6);
    CHECK(r.even_diagonal == 0);

    o.field = FieldDescriptor::prime_field(3);
    o.mode = CensusMode::parse("random:1000");
    o.seed = 42;
    const CensusReport s = run_census(o);
    CHECK(s.processed == 1000);
    CHECK(histogram_total(s.aut_orders) == 1000);
    CHECK(histogram_total(s.diagonal_orders) == 1000);
    CHECK(histogram_total(s.graph_aut_orders) == 1000);
    CHECK(s.candidates == s.processed + s.singular);
    CHECK(s.partial == 0);
    for (const auto& [order, count] : s.diagonal_orders) CHECK(order % 2 == 1);

    o.threads = 8;
    CHECK(dump(run_census(o).to_json()) == dump(s.to_json()));
    o.seed = 43;
    CHECK(dump(run_census(o).to_json()) != dump(s.to_json()));
}

TEST_CASE("census matches a direct count over GF(3), n = 2") {
    CensusOptions o;
    o.field = FieldDescriptor::prime_field(3);
    o.n = 2;
    o.mode = CensusMode::parse("exhaustive");
    const CensusReport r = run_census(o);
    const Field f = GF(3);
    std::map<std::uint64_t, std::uint64_t> aut;
    std::uint64_t nonsingular = 0;
    for (int code = 0; code < 81; ++code) {
        Matrix m(f, 2, 2);
        int x = code;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j, x /= 3) m(i, j) = f.from_residue(x % 3);
        const EvolutionAlgebra a(m);
        if (!a.is_idempotent()) continue;
        ++nonsingular;
        ++aut[brute_force_automorphisms(a).order()];
    }
    CHECK(r.processed == nonsingular);
    CHECK(r.aut_orders == aut);
    CHECK_THROWS_AS(run_census({FieldDescriptor::prime_field(7), 4, CensusMode::parse("exhaustive"), 0, 1}),
                    CapExceeded);
    CHECK_THROWS_AS(run_census({FieldDescriptor::rationals(), 2, CensusMode::parse("random:5"), 0, 1}), DomainError);
}
