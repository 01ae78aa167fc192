#include "schubmf/classifier.hpp"
#include "schubmf/lr.hpp"
#include "schubmf/partition.hpp"
#include "schubmf/witness.hpp"

#include <benchmark/benchmark.h>

using namespace schubmf;

static void BM_LrCoefficient(benchmark::State& state) {
    Partition lam = parse_partition("4,4,2,2");
    Partition mu = parse_partition("3,3,3");
    Partition nu = parse_partition("6,5,4,3,2,1");
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(lam, mu, nu));
}
BENCHMARK(BM_LrCoefficient);

static void BM_ExpandProduct(benchmark::State& state) {
    Partition lam = parse_partition("4,3,2,1");
    Partition mu = parse_partition("4,4,2,2,1");
    RectangleFrame frame{6, 5};
    for (auto _ : state) benchmark::DoNotOptimize(expand_product(lam, mu, frame).terms().size());
}
BENCHMARK(BM_ExpandProduct);

static void BM_ClassifySweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RectangleFrame f{n, n};
    const auto shapes = all_partitions_in(f);
    for (auto _ : state) {
        std::size_t free_count = 0;
        for (const auto& lam : shapes)
            for (const auto& mu : shapes) {
                if (overlaps(lam, mu, f)) continue;
                if (classify(lam, mu, f).outcome == Outcome::MultiplicityFree) ++free_count;
            }
        benchmark::DoNotOptimize(free_count);
    }
}
BENCHMARK(BM_ClassifySweep)->Arg(3)->Arg(4)->Arg(5);

static void BM_BruteForceSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RectangleFrame f{n, n};
    const auto shapes = all_partitions_in(f);
    for (auto _ : state) {
        std::size_t hits = 0;
        for (const auto& lam : shapes)
            for (const auto& mu : shapes) {
                if (overlaps(lam, mu, f)) continue;
                if (has_multiplicity_bruteforce(lam, mu, f)) ++hits;
            }
        benchmark::DoNotOptimize(hits);
    }
}
BENCHMARK(BM_BruteForceSweep)->Arg(3)->Arg(4);

static void BM_HookWitness(benchmark::State& state) {
    RichardsonQuadruple q(parse_partition("11,11,11,7,7,4,4,2,2"), parse_partition("12,1^9"),
                          {11, 13});
    for (auto _ : state) benchmark::DoNotOptimize(witness_hook_case(q).nu.size());
}
BENCHMARK(BM_HookWitness);

BENCHMARK_MAIN();
