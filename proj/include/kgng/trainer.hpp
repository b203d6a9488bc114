#ifndef KGNG_TRAINER_HPP
#define KGNG_TRAINER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kgng/dataset.hpp"
#include "kgng/kernels.hpp"
#include "kgng/network.hpp"

namespace kgng {

struct HyperParams {
  int n_max = 100;               // unit-count cap
  int a_max = 50;                // maximum edge age
  int lambda = 100;              // insertion period
  double alpha = 0.5;            // error split factor on insertion
  double beta = 0.995;           // per-iteration error decay
  double eps_winner = 0.2;       // winner learning rate
  double eps_neighbor = 0.006;   // neighbor learning rate
  std::int64_t iterations = 20000;

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

struct WinnerPair {
  UnitId s1 = 0;
  UnitId s2 = 0;
  double d2_s1 = 0.0;  // feature-space squared distance from x to s1
};

struct TraceRecord {
  std::int64_t iteration = 0;
  double mse = 0.0;
  double kmse = 0.0;
  std::size_t units = 0;
  std::size_t edges = 0;
};

struct TrainingTrace {
  std::vector<std::int64_t> schedule;
  std::vector<TraceRecord> records;
};

// Nearest and second-nearest units to x under the kernel's feature-space
// squared distance; ties go to the smallest id. Needs >= 2 units.
WinnerPair find_winners(const GngNetwork& net, std::span<const double> x,
                        const KernelSpec& spec);

// Gradient-descent pull of the winner (rate eps_winner) and each of its
// direct neighbors (rate eps_neighbor) toward x.
void adapt(GngNetwork& net, std::span<const double> x,
           const WinnerPair& winners, const KernelSpec& spec,
           const HyperParams& hp);

// Adds d2_s1 to the winner's cumulative error.
void accumulate_error(GngNetwork& net, const WinnerPair& winners);

// One full online step for input x at iteration t: winner search, edge
// aging, error accumulation, adaptation, winner-pair edge refresh,
// pruning, periodic insertion (skipped at the n_max cap), error decay.
void train_step(GngNetwork& net, std::span<const double> x, std::int64_t t,
                const KernelSpec& spec, const HyperParams& hp);

struct TrainResult {
  GngNetwork network;
  TrainingTrace trace;
};

// Runs hp.iterations online steps over uniformly resampled data points.
// Fully deterministic given (data, spec, hp, seed); the engine draws, in
// order, are: one index for the first initial unit, repeat draws for the
// second until the index differs, then exactly one index per iteration.
// trace_schedule must be strictly increasing within [1, hp.iterations];
// a trace record is taken after each scheduled iteration completes.
TrainResult train(const Dataset& data, const KernelSpec& spec,
                  const HyperParams& hp, std::uint64_t seed,
                  std::vector<std::int64_t> trace_schedule = {});

}  // namespace kgng

#endif  // KGNG_TRAINER_HPP
