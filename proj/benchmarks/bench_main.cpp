#include <benchmark/benchmark.h>

#include "gkf/euler_char.hpp"
#include "gkf/field_sim.hpp"
#include "gkf/gmf.hpp"
#include "gkf/rng.hpp"
#include "gkf/special_fn.hpp"
#include "gkf/tube_oracle.hpp"

namespace {

void BM_Hermite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 1.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkf::hermite(n, x));
    x += 1e-9;  // defeat value caching
  }
}
BENCHMARK(BM_Hermite)->Arg(4)->Arg(16);

void BM_GmfChi(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gkf::gmf_chi(3, 2.0, 4));
}
BENCHMARK(BM_GmfChi);

void BM_TubeVolume(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  gkf::Domain dom = gkf::BallComplement{2, 2.0};
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(gkf::mc_tube_volume(dom, 0.2, n, seed++));
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_TubeVolume)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_SynthesizeField(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gkf::SpectralModel model{8.0};
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gkf::synthesize_field(model, n, 1.0, gkf::Topology::torus, seed++));
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * n *
                          state.iterations());
}
BENCHMARK(BM_SynthesizeField)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EulerChar2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gkf::CounterRng rng(7);
  gkf::MaskGrid m;
  m.n = n;
  m.topology = gkf::Topology::torus;
  m.on.resize(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < m.on.size(); ++i) m.on[i] = rng.uniform(i) < 0.5;
  for (auto _ : state)
    benchmark::DoNotOptimize(gkf::euler_char_2d(m));
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * n *
                          state.iterations());
}
BENCHMARK(BM_EulerChar2d)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
