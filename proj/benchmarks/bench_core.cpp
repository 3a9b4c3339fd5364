#include "tcpd/linalg.hpp"
#include "tcpd/oracle.hpp"
#include "tcpd/search.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace tcpd;

template <ScalarRing Ring>
Tensor<Ring> random_tensor(const Ring& ring, const Shape& shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Tensor<Ring> t(ring, shape);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = ring.element(std::uniform_int_distribution<std::uint64_t>(0, ring.size() - 1)(rng));
    return t;
}

Matrix<PrimeField> random_matrix(const PrimeField& f, std::size_t n, std::uint64_t seed) {
    return unfold(random_tensor(f, {n, n}, seed), 0);
}

void BM_Rref(benchmark::State& state) {
    const PrimeField f(static_cast<std::uint32_t>(state.range(1)));
    const auto m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{8, 32, 128}, {2, 3, 65521}});

void BM_Gf2Rank(benchmark::State& state) {
    const auto m = random_matrix(PrimeField(2), static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(m));
}
BENCHMARK(BM_Gf2Rank)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_BorderRowReduce(benchmark::State& state) {
    const BorderRing ring(PrimeField(3), static_cast<int>(state.range(1)));
    const auto m = unfold(random_tensor(ring, {static_cast<std::size_t>(state.range(0)), 16}, 3), 0);
    for (auto _ : state) benchmark::DoNotOptimize(border_row_reduce(m));
}
BENCHMARK(BM_BorderRowReduce)->ArgsProduct({{4, 16}, {1, 4, 8}});

/// Searches on a fixed random 3x3x3 tensor; counters report the work done.
void BM_RrefSearch(benchmark::State& state) {
    const PrimeField f(2);
    const std::size_t budget = static_cast<std::size_t>(state.range(0));
    const auto t = random_tensor(f, {3, 3, 3}, 11);
    SearchOutcome<PrimeField> out;
    for (auto _ : state) out = rref_search(t, budget);
    state.counters["pairs"] = static_cast<double>(out.stats.pairs_inspected);
    state.counters["found"] = out.found() ? 1 : 0;
}
BENCHMARK(BM_RrefSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DfsSearch(benchmark::State& state) {
    const PrimeField f(2);
    const auto t = random_tensor(f, {3, 3, 3}, 11);
    SearchOutcome<PrimeField> out;
    for (auto _ : state) out = dfs_search(t, static_cast<std::size_t>(state.range(0)));
    state.counters["root_branches"] = static_cast<double>(out.stats.root_branches);
    state.counters["root_children_recursed"] = static_cast<double>(out.stats.root_children_recursed);
    state.counters["nodes"] = static_cast<double>(out.stats.nodes);
    state.counters["found"] = out.found() ? 1 : 0;
}
BENCHMARK(BM_DfsSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BorderRankW(benchmark::State& state) {
    const PrimeField f(static_cast<std::uint32_t>(state.range(0)));
    Tensor<PrimeField> w(f, {2, 2, 2});
    w[1] = w[2] = w[4] = f.one();
    const int h = static_cast<int>(state.range(1));
    SearchStats stats;
    for (auto _ : state) stats = border_rank_at(w, h, 3).stats;
    state.counters["root_branches"] = static_cast<double>(stats.root_branches);
    state.counters["root_children_recursed"] = static_cast<double>(stats.root_children_recursed);
}
BENCHMARK(BM_BorderRankW)->ArgsProduct({{2, 3}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_OracleRank(benchmark::State& state) {
    const PrimeField f(2);
    const auto t = random_tensor(f, {2, 2, 2}, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_rank(t, 3));
}
BENCHMARK(BM_OracleRank)->Arg(1)->Arg(2)->Arg(3);

void BM_RrefSearchThreads(benchmark::State& state) {
    const PrimeField f(2);
    const auto t = random_tensor(f, {3, 3, 3}, 11);
    SearchOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rref_search(t, 4, opts));
}
BENCHMARK(BM_RrefSearchThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
