// OpenMP sweeps against their serial reference on the same corpora.

#include <benchmark/benchmark.h>

#include "linkgraph/catalog.hpp"
#include "linkgraph/generators.hpp"
#include "linkgraph/sweeps.hpp"

using namespace linkgraph;

namespace {

const std::vector<MapCase>& map_cases() {
    static const auto cases = random_map_cases(20240611, 600, 12);
    return cases;
}

const std::vector<StateCase>& state_cases() {
    static const auto cases = [] {
        std::vector<LinkDiagram> ds;
        for (const auto& e : catalog()) ds.push_back(parse_pd(e.pd));
        return all_state_cases(ds);
    }();
    return cases;
}

const std::vector<ReconstructionCase>& rec_cases() {
    static const auto cases = reconstruction_cases(4);
    return cases;
}

template <bool Parallel, class T, class F>
void run(benchmark::State& st, const std::vector<T>& items, F check) {
    for (auto _ : st) {
        auto r = Parallel ? sweep(items, check) : sweep_serial(items, check);
        if (!r.pass()) st.SkipWithError(r.first_failure.c_str());
        benchmark::DoNotOptimize(r);
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(items.size()));
}

void BM_PartialDual_Serial(benchmark::State& st) { run<false>(st, map_cases(), check_partial_dual_axioms); }
void BM_PartialDual_OpenMP(benchmark::State& st) { run<true>(st, map_cases(), check_partial_dual_axioms); }
void BM_States_Serial(benchmark::State& st) { run<false>(st, state_cases(), check_state_partial_dual); }
void BM_States_OpenMP(benchmark::State& st) { run<true>(st, state_cases(), check_state_partial_dual); }
void BM_Reconstruct_Serial(benchmark::State& st) { run<false>(st, rec_cases(), check_reconstruction); }
void BM_Reconstruct_OpenMP(benchmark::State& st) { run<true>(st, rec_cases(), check_reconstruction); }

}  // namespace

BENCHMARK(BM_PartialDual_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialDual_OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_States_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_States_OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reconstruct_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reconstruct_OpenMP)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
