// Serial reference path (jobs = 1) against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "xm/fixtures.hpp"
#include "xm/pathspace.hpp"
#include "xm/suites.hpp"

using namespace xm;

namespace {

const XModP& src() {
    static XModP a = fixtures::fix_c(fixtures::Z2t());
    return a;
}
const XModP& tgt() {
    static XModP b = fixtures::fix_d();
    return b;
}

void BM_lax_search(benchmark::State& st) {
    int jobs = static_cast<int>(st.range(0));
    auto fs = enumerate_morphisms(src(), tgt());
    for (auto _ : st)
        for (const auto& f : fs) benchmark::DoNotOptimize(lax_search(f, jobs).found.size());
    st.counters["tuples"] = benchmark::Counter(static_cast<double>(lax_space_size(fs[0]) * fs.size()),
                                               benchmark::Counter::kIsIterationInvariantRate);
}

void BM_lax_laws(benchmark::State& st) {
    static Q1 Q = q1(src());
    static auto cells = all_lax_cells(src(), tgt(), 0);
    LaxLawCfg cfg;
    cfg.run.jobs = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(lax_laws(cells, Q, cfg).passed());
}

void BM_verify_pathspace(benchmark::State& st) {
    static PathSpace P = path_space(fixtures::fix_c(fixtures::S3()));
    VerifyCfg cfg;
    cfg.run.jobs = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(verify_two_crossed(*P.total, cfg).passed());
}

}  // namespace

BENCHMARK(BM_lax_search)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lax_laws)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_pathspace)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
