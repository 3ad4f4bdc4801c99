#include "apery/claims.hpp"

#include <benchmark/benchmark.h>

using namespace apery;

namespace {

void BM_PrefixMod(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    PrimePowerModulus m(p, 3);
    for (auto _ : state) benchmark::DoNotOptimize(prefix_mod_named(Named::V6, m, static_cast<unsigned>(p)));
}
BENCHMARK(BM_PrefixMod)->Arg(97)->Arg(199);

void BM_DefinitionalReduction(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    PrimePowerModulus m(p, 3);
    for (auto _ : state) {
        std::vector<Residue> out;
        for (unsigned n = 0; n < p; ++n) out.push_back(reduce_mod(named_term(Named::V6, n), m));
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_DefinitionalReduction)->Arg(97)->Arg(199);

void BM_SpecialTables(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(special_tables(p));
}
BENCHMARK(BM_SpecialTables)->Arg(97)->Arg(199);

void BM_ExactTerm(benchmark::State& state) {
    auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(named_term(Named::G3, n));
}
BENCHMARK(BM_ExactTerm)->Arg(200)->Arg(600);

void BM_SweepFamily(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep({"T4.5"}, 5, 97, 1));
}
BENCHMARK(BM_SweepFamily)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
