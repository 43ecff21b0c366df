#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "hyperperm/bijection.hpp"
#include "hyperperm/enumeration.hpp"
#include "hyperperm/orders.hpp"
#include "hyperperm/patterns.hpp"

using namespace hyperperm;

namespace {

DPermutation random_perm(int d, int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(d - 1));
    for (auto& row : rows) {
        row.resize(static_cast<std::size_t>(n));
        std::iota(row.begin(), row.end(), 1);
        std::shuffle(row.begin(), row.end(), rng);
    }
    return DPermutation(std::move(rows));
}

}  // namespace

static void BM_MaxTree(benchmark::State& state) {
    DPermutation perm = random_perm(3, static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_tree(perm));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxTree)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_Has231(benchmark::State& state) {
    DPermutation perm = random_perm(3, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_231(perm));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Has231)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_HasP1(benchmark::State& state) {
    DPermutation perm = random_perm(4, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_p1(perm));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HasP1)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_IsAdmissible(benchmark::State& state) {
    DPermutation perm = random_perm(3, static_cast<int>(state.range(0)), 99);
    OrderSet orders = staircase_orders(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_admissible(perm, orders));
    }
}
BENCHMARK(BM_IsAdmissible)->Arg(64)->Arg(256);

static void BM_TreeRoundTrip(benchmark::State& state) {
    DPermutation perm = random_perm(2, static_cast<int>(state.range(0)), 3);
    OrderSet orders = staircase_orders(2);
    HyperTree tree = max_tree(tree_to_perm(max_tree(perm), orders));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree_to_perm(tree, orders));
    }
}
BENCHMARK(BM_TreeRoundTrip)->Arg(128)->Arg(512);

static void BM_CountAvoidersCell(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_avoiders(3, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CountAvoidersCell)->Arg(3)->Arg(4);

static void BM_FussCatalan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(fuss_catalan(5, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_FussCatalan)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
