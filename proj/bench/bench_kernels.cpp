// Serial reference against the OpenMP kernel for each parallel sweep.
// Argument 0 selects the serial path, 1 the parallel one.

#include <benchmark/benchmark.h>

#include "pprime/constructions.hpp"
#include "pprime/lie_bounds.hpp"
#include "pprime/parallel.hpp"
#include "pprime/symmetric_chars.hpp"
#include "pprime/torus_search.hpp"

using namespace pprime;

namespace
{

Execution mode(const benchmark::State &state)
{
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State &state)
{
  state.SetLabel(state.range(0) == 0 ? "serial"
                                     : "parallel x" + std::to_string(max_threads()));
}

void BM_SymmetricSweep(benchmark::State &state)
{
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(verify_symmetric_bounds(25, std::nullopt, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_SymmetricSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassicalGrid(benchmark::State &state)
{
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(
        classical_inequality_check(ClassicalFamily::BC, ClassicalGrid{}, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_ClassicalGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DefiningGrid(benchmark::State &state)
{
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(defining_char_check(DefiningGrid{}, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_DefiningGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TorusSearch(benchmark::State &state)
{
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(lie_type_hits(256, 12, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_TorusSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CliffordCount(benchmark::State &state)
{
  static const GammaLConstruction c = build_gamma_l(17, 13);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(clifford_pprime_count(c.action, 17, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_CliffordCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
