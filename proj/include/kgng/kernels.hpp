#ifndef KGNG_KERNELS_HPP
#define KGNG_KERNELS_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace kgng {

enum class KernelKind { Plain, Gaussian, Laplacian, Cauchy, Imq, Log };

// Kernel family plus bandwidth parameter gamma. Plain is the squared
// Euclidean distance with no kernel form; gamma is ignored for it.
struct KernelSpec {
  KernelKind kind = KernelKind::Plain;
  double gamma = 1.0;

  static KernelSpec plain() { return {KernelKind::Plain, 1.0}; }
  // Throws std::invalid_argument unless gamma > 0 (non-Plain kinds).
  static KernelSpec make(KernelKind kind, double gamma);

  void validate() const;
};

// Lowercase names used by the CLI and config files:
// plain, gaussian, laplacian, cauchy, imq, log.
std::string_view kernel_name(KernelKind kind);
std::optional<KernelKind> kernel_from_name(std::string_view name);
const std::vector<KernelKind>& all_kernel_kinds();

// K(x, w). Not defined for Plain; throws std::invalid_argument for it.
double kernel_value(const KernelSpec& spec, std::span<const double> x,
                    std::span<const double> w);

// Squared distance between x and w in the kernel's feature space.
// Zero iff x == w; strictly increasing in ||x - w||.
double feature_distance_sq(const KernelSpec& spec, std::span<const double> x,
                           std::span<const double> w);

// Same quantity as a function of r2 = ||x - w||^2. Shared by the winner
// search and the quantization metrics, which compute r2 once per pair.
double feature_distance_sq_from_r2(const KernelSpec& spec, double r2);

// The gradient of feature_distance_sq with respect to w is always
// coefficient(r2) * (x - w); this returns that scalar coefficient.
// Returns 0 when ||x - w|| < 1e-12: the gradient is singular there for
// the Laplacian (and Log with gamma < 2), and a unit that already
// coincides with the input has nowhere to move.
double distance_gradient_coefficient(const KernelSpec& spec, double r2);

// Gradient of feature_distance_sq with respect to w, written into grad.
void distance_gradient(const KernelSpec& spec, std::span<const double> x,
                       std::span<const double> w, std::span<double> grad);
std::vector<double> distance_gradient(const KernelSpec& spec,
                                      std::span<const double> x,
                                      std::span<const double> w);

// Sum of squared coordinate differences; used as r2 above.
double squared_euclidean(std::span<const double> x, std::span<const double> w);

}  // namespace kgng

#endif  // KGNG_KERNELS_HPP
