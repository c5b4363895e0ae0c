#include <benchmark/benchmark.h>

#include "revposet/catalog.hpp"
#include "revposet/dsl.hpp"
#include "revposet/extraction.hpp"
#include "revposet/maps.hpp"
#include "revposet/topology.hpp"
#include "revposet/window.hpp"

using namespace revposet;

namespace {

void BM_WindowF8(benchmark::State& state) {
  const auto p = forbidden(*ForbiddenKind::parse("F8"));
  for (auto _ : state) benchmark::DoNotOptimize(Window::of(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_WindowF8)->Arg(50)->Arg(200);

void BM_WindowComposite(benchmark::State& state) {
  const auto p = elaborate("duinf(ls(omega,du(Dinf,omega_d)))");
  for (auto _ : state) benchmark::DoNotOptimize(Window::of(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_WindowComposite)->Arg(50)->Arg(200);

void BM_WitnessCheck(benchmark::State& state) {
  const auto k = *ForbiddenKind::parse("F2");
  const auto p = forbidden(k);
  const auto w = witness(k);
  for (auto _ : state) benchmark::DoNotOptimize(is_order_preserving(p, w.map, 200));
}
BENCHMARK(BM_WitnessCheck);

void BM_Extract(benchmark::State& state, const char* key) {
  const auto k = *ForbiddenKind::parse(key);
  const auto p = forbidden(k);
  const auto w = witness(k);
  for (auto _ : state) benchmark::DoNotOptimize(extract_forbidden(p, w.map, w.pair.first, w.pair.second));
}
BENCHMARK_CAPTURE(BM_Extract, F1, "F1");
BENCHMARK_CAPTURE(BM_Extract, F5, "F5");
BENCHMARK_CAPTURE(BM_Extract, F7, "F7");
BENCHMARK_CAPTURE(BM_Extract, F8, "F8");

void BM_BrutePosets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    bool all = true;
    for_each_finite_order(n, false, [&](const FiniteOrder& f) { all = all && brute_force_reversible(f).reversible; });
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_BrutePosets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Topologies(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_topology(n, [&](const FiniteSpace&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Topologies)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
