// Serial reference vs OpenMP kernels on the operators the checks build.
#include "hlpos/exactalg/sparse_operator.hpp"
#include "hlpos/extvertex/model.hpp"
#include "hlpos/plactic/subset.hpp"
#include "hlpos/sixvertex/transfer.hpp"
#include "hlpos/symfunc/hall_littlewood.hpp"

#include <benchmark/benchmark.h>

using hlpos::exactalg::Exec;

namespace {

void BM_compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto exec = state.range(1) ? Exec::parallel : Exec::serial;
  const auto& a = hlpos::sixvertex::transfer_Tk(2, n);
  const auto& b = hlpos::sixvertex::transfer_Tk(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::exactalg::compose(a, b, exec));
}

void BM_compose_dense_reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& a = hlpos::sixvertex::transfer_Tk(2, n);
  const auto& b = hlpos::sixvertex::transfer_Tk(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::exactalg::reference::compose(a, b));
}

void BM_transfer_T(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto exec = state.range(1) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::sixvertex::transfer_T(n, 4, exec));
}

void BM_transfer_T_reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::sixvertex::reference::transfer_T(n, 4));
}

void BM_ext_transfer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto exec = state.range(1) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::extvertex::ExtTransfer(n, exec));
}

void BM_hl_symmetrization(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto exec = state.range(1) ? Exec::parallel : Exec::serial;
  const hlpos::combinat::Partition lambda({3, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::symfunc::hl_symmetrization(lambda, n, exec));
}

void BM_hl_symmetrization_reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hlpos::combinat::Partition lambda({3, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::symfunc::reference::hl_symmetrization(lambda, n));
}

void BM_plactic_schur(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto exec = state.range(1) ? Exec::parallel : Exec::serial;
  const hlpos::combinat::Partition lambda({2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hlpos::plactic::plactic_schur_operator(lambda, n, exec));
}

}  // namespace

// Second argument: 0 serial, 1 parallel.
BENCHMARK(BM_compose)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compose_dense_reference)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_transfer_T)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_transfer_T_reference)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ext_transfer)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hl_symmetrization)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hl_symmetrization_reference)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_plactic_schur)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
