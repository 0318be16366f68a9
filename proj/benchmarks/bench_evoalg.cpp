#include <evoalg/census.hpp>
#include <evoalg/factory.hpp>
#include <evoalg/sampling.hpp>
#include <evoalg/smith.hpp>
#include <evoalg/solver.hpp>

#include <benchmark/benchmark.h>

using namespace evoalg;

namespace {

void BM_AutCompleteGraph(benchmark::State& state) {
    const auto alg = complete_graph_algebra(static_cast<std::size_t>(state.range(0)), Field());
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(alg).group.order());
}
BENCHMARK(BM_AutCompleteGraph)->DenseRange(3, 6);

void BM_AutCycleCyclotomic(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Field f(FieldDescriptor::cyclotomic((1u << n) - 1));
    const auto alg = cycle_algebra(n, f);
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(alg).group.order());
}
BENCHMARK(BM_AutCycleCyclotomic)->DenseRange(2, 4);

void BM_AutRandomGF7(benchmark::State& state) {
    const Field f(FieldDescriptor::prime_field(7));
    Rng rng(1);
    const auto alg = random_idempotent([&] { return random_prime_field_matrix(f, 3, rng); });
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(alg).group.order());
}
BENCHMARK(BM_AutRandomGF7);

void BM_CensusGF3(benchmark::State& state) {
    CensusOptions o;
    o.field = FieldDescriptor::prime_field(3);
    o.n = 2;
    o.mode = CensusMode::parse("exhaustive");
    o.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_census(o).processed);
}
BENCHMARK(BM_CensusGF3)->Arg(1)->Arg(4)->UseRealTime();

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    IntMatrix m(n, std::vector<mpz_class>(n));
    for (auto& row : m)
        for (auto& x : row) x = static_cast<long>(draw(rng, 41)) - 20;
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, n).rank);
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_KthRootsCyclotomic(benchmark::State& state) {
    const Field f(FieldDescriptor::cyclotomic(15));
    const Scalar c = f.from_int(1 << 15) * f.zeta().pow(4);
    for (auto _ : state) benchmark::DoNotOptimize(f.kth_roots(c, 15).roots.size());
}
BENCHMARK(BM_KthRootsCyclotomic);

void BM_IsomorphismTwoParam(benchmark::State& state) {
    const Field q;
    const auto a = two_param_algebra(5, q.from_int(2), q.from_int(4));
    const auto b = two_param_algebra(5, q.one(), q.from_int(2));
    for (auto _ : state) benchmark::DoNotOptimize(isomorphism(a, b).status);
}
BENCHMARK(BM_IsomorphismTwoParam);

}  // namespace

BENCHMARK_MAIN();
