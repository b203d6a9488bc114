#include "kgng/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "kgng/rng.hpp"

namespace kgng {

namespace {

constexpr double kPi = 3.14159265358979323846;

Dataset make_dataset(std::size_t rows, std::size_t cols, std::string name) {
  Dataset d;
  d.rows = rows;
  d.cols = cols;
  d.values.assign(rows * cols, 0.0);
  d.name = std::move(name);
  return d;
}

Dataset gen_square(std::size_t n, Rng& rng) {
  Dataset d = make_dataset(n, 2, "square");
  for (std::size_t i = 0; i < n; ++i) {
    d.values[2 * i] = rng.uniform();
    d.values[2 * i + 1] = rng.uniform();
  }
  return d;
}

Dataset gen_blobs(std::size_t n, Rng& rng) {
  Dataset d = make_dataset(n, 2, "blobs");
  double centers[3][2];
  for (auto& center : centers) {
    center[0] = rng.uniform(-10.0, 10.0);
    center[1] = rng.uniform(-10.0, 10.0);
  }
  const std::size_t base = n / 3;
  const std::size_t rem = n % 3;
  std::size_t row = 0;
  for (std::size_t c = 0; c < 3; ++c) {
    const std::size_t count = base + (c < rem ? 1 : 0);
    for (std::size_t i = 0; i < count; ++i, ++row) {
      d.values[2 * row] = centers[c][0] + rng.gaussian();
      d.values[2 * row + 1] = centers[c][1] + rng.gaussian();
    }
  }
  return d;
}

Dataset gen_circles(std::size_t n, Rng& rng, double noise_std) {
  Dataset d = make_dataset(n, 2, "circles");
  const std::size_t n_in = n / 2;
  const std::size_t n_out = n - n_in;
  std::size_t row = 0;
  auto emit = [&](double radius, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i, ++row) {
      const double theta = 2.0 * kPi * static_cast<double>(i) /
                           static_cast<double>(count);
      d.values[2 * row] = radius * std::cos(theta) + noise_std * rng.gaussian();
      d.values[2 * row + 1] =
          radius * std::sin(theta) + noise_std * rng.gaussian();
    }
  };
  emit(1.0, n_out);
  emit(0.5, n_in);
  return d;
}

Dataset gen_moons(std::size_t n, Rng& rng, double noise_std) {
  Dataset d = make_dataset(n, 2, "moons");
  const std::size_t n_low = n / 2;
  const std::size_t n_up = n - n_low;
  std::size_t row = 0;
  auto angle = [](std::size_t i, std::size_t count) {
    return count > 1
               ? kPi * static_cast<double>(i) / static_cast<double>(count - 1)
               : 0.0;
  };
  for (std::size_t i = 0; i < n_up; ++i, ++row) {
    const double theta = angle(i, n_up);
    d.values[2 * row] = std::cos(theta) + noise_std * rng.gaussian();
    d.values[2 * row + 1] = std::sin(theta) + noise_std * rng.gaussian();
  }
  for (std::size_t i = 0; i < n_low; ++i, ++row) {
    const double theta = angle(i, n_low);
    d.values[2 * row] = 1.0 - std::cos(theta) + noise_std * rng.gaussian();
    d.values[2 * row + 1] = 0.5 - std::sin(theta) + noise_std * rng.gaussian();
  }
  return d;
}

Dataset gen_swiss_roll(std::size_t n, Rng& rng) {
  Dataset d = make_dataset(n, 3, "swiss_roll");
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    const double v = rng.uniform();
    const double t = 1.5 * kPi * (1.0 + 2.0 * u);
    d.values[3 * i] = t * std::cos(t);
    d.values[3 * i + 1] = 21.0 * v;
    d.values[3 * i + 2] = t * std::sin(t);
  }
  return d;
}

Dataset gen_s_curve(std::size_t n, Rng& rng) {
  Dataset d = make_dataset(n, 3, "s_curve");
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    const double v = rng.uniform();
    const double t = 3.0 * kPi * (u - 0.5);
    d.values[3 * i] = std::sin(t);
    d.values[3 * i + 1] = 2.0 * v;
    d.values[3 * i + 2] = (t < 0.0 ? -1.0 : 1.0) * (std::cos(t) - 1.0);
  }
  return d;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view synthetic_name(SyntheticKind kind) {
  switch (kind) {
    case SyntheticKind::Square: return "square";
    case SyntheticKind::Blobs: return "blobs";
    case SyntheticKind::Circles: return "circles";
    case SyntheticKind::Moons: return "moons";
    case SyntheticKind::SwissRoll: return "swiss_roll";
    case SyntheticKind::SCurve: return "s_curve";
  }
  return "unknown";
}

std::optional<SyntheticKind> synthetic_from_name(std::string_view name) {
  for (SyntheticKind kind : all_synthetic_kinds()) {
    if (name == synthetic_name(kind)) return kind;
  }
  return std::nullopt;
}

const std::vector<SyntheticKind>& all_synthetic_kinds() {
  static const std::vector<SyntheticKind> kinds = {
      SyntheticKind::Square,    SyntheticKind::Blobs,
      SyntheticKind::Circles,   SyntheticKind::Moons,
      SyntheticKind::SwissRoll, SyntheticKind::SCurve};
  return kinds;
}

Dataset generate(SyntheticKind kind, std::size_t n, std::uint64_t seed,
                 const GenerateOptions& options) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (options.noise_std < 0.0) {
    throw std::invalid_argument("noise_std must be >= 0");
  }
  Rng rng(seed);
  switch (kind) {
    case SyntheticKind::Square: return gen_square(n, rng);
    case SyntheticKind::Blobs: return gen_blobs(n, rng);
    case SyntheticKind::Circles: return gen_circles(n, rng, options.noise_std);
    case SyntheticKind::Moons: return gen_moons(n, rng, options.noise_std);
    case SyntheticKind::SwissRoll: return gen_swiss_roll(n, rng);
    case SyntheticKind::SCurve: return gen_s_curve(n, rng);
  }
  throw std::invalid_argument("unknown dataset kind");
}

Dataset load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  Dataset d;
  d.name = path;
  std::string line;
  std::size_t line_no = 0;
  std::size_t data_row = 0;
  std::size_t raw_cols = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (options.has_header && line_no == 1) continue;
    std::string_view rest(line);
    if (trim(rest).empty() && in.peek() == std::char_traits<char>::eof()) {
      break;  // trailing newline
    }

    std::vector<double> row;
    std::size_t col = 0;
    while (true) {
      const std::size_t comma = rest.find(',');
      std::string_view cell = trim(rest.substr(0, comma));
      ++col;
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() ||
          !std::isfinite(value)) {
        throw std::runtime_error(path + ": row " + std::to_string(line_no) +
                                 ", column " + std::to_string(col) +
                                 ": cannot parse '" + std::string(cell) +
                                 "' as a finite number");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }

    if (options.label_column) {
      if (*options.label_column >= row.size()) {
        throw std::runtime_error(path + ": label column " +
                                 std::to_string(*options.label_column) +
                                 " out of range (row has " +
                                 std::to_string(row.size()) + " columns)");
      }
      row.erase(row.begin() +
                static_cast<std::ptrdiff_t>(*options.label_column));
    }

    if (data_row == 0) {
      raw_cols = row.size();
      if (raw_cols == 0) {
        throw std::runtime_error(path + ": row " + std::to_string(line_no) +
                                 " has no columns");
      }
    } else if (row.size() != raw_cols) {
      throw std::runtime_error(path + ": row " + std::to_string(line_no) +
                               " has " + std::to_string(row.size()) +
                               " columns, expected " +
                               std::to_string(raw_cols));
    }
    d.values.insert(d.values.end(), row.begin(), row.end());
    ++data_row;
  }

  if (data_row == 0) throw std::runtime_error(path + ": no data rows");
  d.rows = data_row;
  d.cols = raw_cols;
  return d;
}

void write_csv(const Dataset& data, const std::string& path) {
  std::ostringstream out;
  char buf[64];
  for (std::size_t r = 0; r < data.rows; ++r) {
    for (std::size_t c = 0; c < data.cols; ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.at(r, c));
      if (c > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }

  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << out.str();
  }
  std::filesystem::rename(tmp, path);
}

std::pair<Dataset, NormalizationStats> normalize(const Dataset& data) {
  if (data.rows < 2) {
    throw std::invalid_argument("normalization needs at least 2 points");
  }
  const double n = static_cast<double>(data.rows);
  NormalizationStats stats;
  stats.means.assign(data.cols, 0.0);
  stats.stds.assign(data.cols, 0.0);

  for (std::size_t r = 0; r < data.rows; ++r) {
    for (std::size_t c = 0; c < data.cols; ++c) {
      stats.means[c] += data.at(r, c);
    }
  }
  for (double& m : stats.means) m /= n;
  for (std::size_t r = 0; r < data.rows; ++r) {
    for (std::size_t c = 0; c < data.cols; ++c) {
      const double diff = data.at(r, c) - stats.means[c];
      stats.stds[c] += diff * diff;
    }
  }
  for (double& s : stats.stds) s = std::sqrt(s / n);

  Dataset out = data;
  out.normalized = true;
  for (std::size_t c = 0; c < data.cols; ++c) {
    if (stats.stds[c] < 1e-12) {
      std::cerr << "warning: column " << c
                << " is (near-)constant; normalized to zeros\n";
      for (std::size_t r = 0; r < data.rows; ++r) {
        out.values[r * data.cols + c] = 0.0;
      }
    } else {
      for (std::size_t r = 0; r < data.rows; ++r) {
        out.values[r * data.cols + c] =
            (data.at(r, c) - stats.means[c]) / stats.stds[c];
      }
    }
  }
  return {std::move(out), std::move(stats)};
}

}  // namespace kgng
