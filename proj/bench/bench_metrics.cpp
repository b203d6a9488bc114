// Serial reference vs OpenMP quantization-error kernels.

#include <benchmark/benchmark.h>

#include "kgng/experiment.hpp"
#include "kgng/metrics.hpp"

namespace {

using namespace kgng;

struct Fixture {
  Dataset data;
  TrainResult trained;

  explicit Fixture(std::size_t n)
      : data(normalize(generate(SyntheticKind::Blobs, n, 1)).first),
        trained(train(data, {KernelKind::Gaussian, 1.8},
                      [] {
                        HyperParams hp;
                        hp.iterations = 10000;
                        return hp;
                      }(),
                      1)) {}
};

Fixture& fixture(std::size_t n) {
  static Fixture small(1000);
  static Fixture medium(10000);
  static Fixture large(100000);
  if (n <= 1000) return small;
  if (n <= 10000) return medium;
  return large;
}

void bm_mse_serial(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::mse(f.trained.network, f.data));
  }
}

void bm_mse_parallel(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mse(f.trained.network, f.data));
  }
}

void bm_kmse_serial(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  const KernelSpec spec{KernelKind::Gaussian, 1.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::kmse(f.trained.network, f.data, spec));
  }
}

void bm_kmse_parallel(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  const KernelSpec spec{KernelKind::Gaussian, 1.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmse(f.trained.network, f.data, spec));
  }
}

BENCHMARK(bm_mse_serial)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(bm_mse_parallel)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(bm_kmse_serial)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(bm_kmse_parallel)->Arg(1000)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
