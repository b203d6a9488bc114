#include "kgng/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kgng {

namespace {

// Below this separation the gradient direction is meaningless and the
// Laplacian/Log coefficients are singular.
constexpr double kSingularRadius = 1e-12;

void check_dimensions(std::span<const double> x, std::span<const double> w) {
  if (x.size() != w.size()) {
    throw std::invalid_argument("kernel arguments have different dimensions (" +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(w.size()) + ")");
  }
  if (x.empty()) {
    throw std::invalid_argument("kernel arguments must have dimension >= 1");
  }
}

}  // namespace

KernelSpec KernelSpec::make(KernelKind kind, double gamma) {
  KernelSpec spec{kind, gamma};
  spec.validate();
  return spec;
}

void KernelSpec::validate() const {
  if (kind != KernelKind::Plain && !(gamma > 0.0)) {
    throw std::invalid_argument("kernel gamma must be > 0 (got " +
                                std::to_string(gamma) + ")");
  }
}

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Plain: return "plain";
    case KernelKind::Gaussian: return "gaussian";
    case KernelKind::Laplacian: return "laplacian";
    case KernelKind::Cauchy: return "cauchy";
    case KernelKind::Imq: return "imq";
    case KernelKind::Log: return "log";
  }
  return "unknown";
}

std::optional<KernelKind> kernel_from_name(std::string_view name) {
  for (KernelKind kind : all_kernel_kinds()) {
    if (name == kernel_name(kind)) return kind;
  }
  return std::nullopt;
}

const std::vector<KernelKind>& all_kernel_kinds() {
  static const std::vector<KernelKind> kinds = {
      KernelKind::Plain,  KernelKind::Gaussian, KernelKind::Laplacian,
      KernelKind::Cauchy, KernelKind::Imq,      KernelKind::Log};
  return kinds;
}

double squared_euclidean(std::span<const double> x, std::span<const double> w) {
  double sum = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double diff = x[d] - w[d];
    sum += diff * diff;
  }
  return sum;
}

double kernel_value(const KernelSpec& spec, std::span<const double> x,
                    std::span<const double> w) {
  spec.validate();
  check_dimensions(x, w);
  const double r2 = squared_euclidean(x, w);
  const double g = spec.gamma;
  switch (spec.kind) {
    case KernelKind::Plain:
      throw std::invalid_argument(
          "the plain kind has no kernel form, only a distance");
    case KernelKind::Gaussian:
      return std::exp(-r2 / (2.0 * g * g));
    case KernelKind::Laplacian:
      return std::exp(-std::sqrt(r2) / g);
    case KernelKind::Cauchy:
      return 1.0 / (1.0 + r2 / (g * g));
    case KernelKind::Imq:
      return 1.0 / std::sqrt(r2 + g * g);
    case KernelKind::Log:
      return -std::log1p(std::pow(std::sqrt(r2), g));
  }
  throw std::invalid_argument("unknown kernel kind");
}

double feature_distance_sq_from_r2(const KernelSpec& spec, double r2) {
  const double g = spec.gamma;
  switch (spec.kind) {
    case KernelKind::Plain:
      return r2;
    case KernelKind::Gaussian:
      // 2(1 - exp(-r2 / 2g^2)), written to stay exact near r2 = 0.
      return -2.0 * std::expm1(-r2 / (2.0 * g * g));
    case KernelKind::Laplacian:
      return -2.0 * std::expm1(-std::sqrt(r2) / g);
    case KernelKind::Cauchy: {
      const double q = r2 / (g * g);
      return 2.0 * q / (1.0 + q);
    }
    case KernelKind::Imq: {
      // 2(1/g - 1/sqrt(r2 + g^2)) rewritten without the cancellation.
      const double s = std::sqrt(r2 + g * g);
      return 2.0 * r2 / (g * s * (s + g));
    }
    case KernelKind::Log:
      return 2.0 * std::log1p(std::pow(std::sqrt(r2), g));
  }
  throw std::invalid_argument("unknown kernel kind");
}

double feature_distance_sq(const KernelSpec& spec, std::span<const double> x,
                           std::span<const double> w) {
  spec.validate();
  check_dimensions(x, w);
  return feature_distance_sq_from_r2(spec, squared_euclidean(x, w));
}

double distance_gradient_coefficient(const KernelSpec& spec, double r2) {
  if (r2 < kSingularRadius * kSingularRadius) return 0.0;
  const double g = spec.gamma;
  switch (spec.kind) {
    case KernelKind::Plain:
      return -2.0;
    case KernelKind::Gaussian:
      return -2.0 / (g * g) * std::exp(-r2 / (2.0 * g * g));
    case KernelKind::Laplacian: {
      const double r = std::sqrt(r2);
      return -2.0 / (g * r) * std::exp(-r / g);
    }
    case KernelKind::Cauchy: {
      const double q = 1.0 + r2 / (g * g);
      return -4.0 / (g * g) / (q * q);
    }
    case KernelKind::Imq: {
      const double s = std::sqrt(r2 + g * g);
      return -2.0 / (s * s * s);
    }
    case KernelKind::Log: {
      const double r = std::sqrt(r2);
      return -2.0 * g * std::pow(r, g - 2.0) / (std::pow(r, g) + 1.0);
    }
  }
  throw std::invalid_argument("unknown kernel kind");
}

void distance_gradient(const KernelSpec& spec, std::span<const double> x,
                       std::span<const double> w, std::span<double> grad) {
  spec.validate();
  check_dimensions(x, w);
  if (grad.size() != x.size()) {
    throw std::invalid_argument("gradient output has wrong dimension");
  }
  const double coeff =
      distance_gradient_coefficient(spec, squared_euclidean(x, w));
  for (std::size_t d = 0; d < x.size(); ++d) {
    grad[d] = coeff * (x[d] - w[d]);
  }
}

std::vector<double> distance_gradient(const KernelSpec& spec,
                                      std::span<const double> x,
                                      std::span<const double> w) {
  std::vector<double> grad(x.size());
  distance_gradient(spec, x, w, grad);
  return grad;
}

}  // namespace kgng
