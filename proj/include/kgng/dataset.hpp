#ifndef KGNG_DATASET_HPP
#define KGNG_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgng {

// Row-major matrix of points. Every cell is finite and every row has the
// same width.
struct Dataset {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::string name;
  bool normalized = false;

  std::span<const double> point(std::size_t i) const {
    return {values.data() + i * cols, cols};
  }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

// Per-column mean and population standard deviation.
struct NormalizationStats {
  std::vector<double> means;
  std::vector<double> stds;
};

enum class SyntheticKind { Square, Blobs, Circles, Moons, SwissRoll, SCurve };

std::string_view synthetic_name(SyntheticKind kind);
std::optional<SyntheticKind> synthetic_from_name(std::string_view name);
const std::vector<SyntheticKind>& all_synthetic_kinds();

struct GenerateOptions {
  double noise_std = 0.05;  // circles and moons only
};

// Seeded synthetic generators:
//   square     uniform on [0,1]^2
//   blobs      n split evenly over 3 isotropic Gaussian clusters (std 1)
//              whose centers are uniform on [-10,10]^2
//   circles    concentric circles of radius 1 and 0.5 plus coordinate noise
//   moons      two interlocking half-circles plus coordinate noise
//   swiss_roll (t cos t, 21 v, t sin t) with t = 1.5*pi*(1 + 2u)
//   s_curve    (sin t, 2 v, sign(t)(cos t - 1)) with t = 3*pi*(u - 1/2)
Dataset generate(SyntheticKind kind, std::size_t n, std::uint64_t seed,
                 const GenerateOptions& options = {});

struct CsvOptions {
  bool has_header = false;
  std::optional<std::size_t> label_column;  // zero-based; dropped when set
};

// Strict numeric CSV reader; parse failures name the row and column.
Dataset load_csv(const std::string& path, const CsvOptions& options = {});

// Headerless CSV, one point per row, 17 significant digits.
void write_csv(const Dataset& data, const std::string& path);

// Z-scores each column with the population standard deviation. Columns
// with std below 1e-12 come out as all zeros (a warning goes to stderr).
std::pair<Dataset, NormalizationStats> normalize(const Dataset& data);

}  // namespace kgng

#endif  // KGNG_DATASET_HPP
