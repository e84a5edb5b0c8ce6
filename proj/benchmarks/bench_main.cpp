#include <benchmark/benchmark.h>

#include <numbers>

#include "qce/qce.hpp"

using namespace qce;

static void BM_PropagatorStatic(benchmark::State& st)
{
    const int n = static_cast<int>(st.range(0));
    const auto h = assemble(n == 2 ? chloroform2() : twin_ising4(CopyKind::xy), 0.0).matrix();
    for (auto _ : st)
        benchmark::DoNotOptimize(propagator_static(h, 3.7));
}
BENCHMARK(BM_PropagatorStatic)->Arg(2)->Arg(4);

static void BM_ResonantPulse(benchmark::State& st)
{
    const auto m = chloroform2();
    const auto table = builtin_pulse_table("resonant-optimized");
    const auto p = std::get<Pulse>(compile_physical(QuantumProgram{"x", {X(1)}}, m, table).body.front());
    const auto h = pulse_hamiltonian(m, p);
    for (auto _ : st)
        benchmark::DoNotOptimize(propagator_timedep(h, 0.0, p.duration, {}));
}
BENCHMARK(BM_ResonantPulse)->Unit(benchmark::kMillisecond);

static void BM_MasterRhs(benchmark::State& st)
{
    const auto h = assemble(chloroform2(), 0.0);
    BathSpec bath;
    bath.lambda = 1e-5;
    bath.C = default_bath_coupling(2);
    const CMatrix r = build_R(h, bath).matrix();
    const CMatrix rho = DensityMatrix::pure(uniform_state(2)).matrix();
    for (auto _ : st)
        benchmark::DoNotOptimize(master_rhs(h.matrix(), rho, bath.C.matrix(), r, bath.lambda));
}
BENCHMARK(BM_MasterRhs);

static void BM_Scatter(benchmark::State& st)
{
    ExperimentConfig cfg;
    cfg.samples = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(run_stability_scatter(cfg).good);
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Scatter)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Table1Physical(benchmark::State& st)
{
    ExperimentConfig cfg;
    cfg.mode = Mode::physical;
    for (auto _ : st)
        benchmark::DoNotOptimize(run_table(1, cfg).rows.size());
}
BENCHMARK(BM_Table1Physical)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
