#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "shortwell/energy_series.hpp"
#include "shortwell/models.hpp"

namespace shortwell {

/// Where and how the T-integrals are sampled.
///
/// The real line is cut at -cutoff, the mirrored breakpoints and +cutoff;
/// every panel is split into `subdivisions` equal pieces and carries a
/// Gauss-Legendre rule of `gl_order` points. The integrand must be smooth
/// inside each piece.
struct IntegrationDomain {
  enum class Kind { finite_box, exponential_tail };
  Kind kind = Kind::finite_box;
  double cutoff = 1.0;              // a for [-a, a], X for the tail cut
  double amplitude = 1.0;           // |v(x)| <= amplitude exp(-decay_rate |x|)
  double decay_rate = 1.0;
  std::vector<double> breakpoints;  // positive side, strictly inside (0 allowed)
  int subdivisions = 1;
  int gl_order = 24;
  double tolerance = 1e-10;         // relative refinement tolerance
};

/// finite_box [-1, 1] for the square well; tails at X = 40 (exponential)
/// and X = 25 (Poschl-Teller), pushed further out if the order-4 tail bound
/// would exceed 1e-12.
IntegrationDomain default_domain(ModelId id);

/// Rigorous bound on the part of the order-j integral (prefactor included)
/// dropped by cutting the line at +-X. Zero for a finite box.
double tail_bound(const IntegrationDomain& dom, int j);

/// Product of distances |x_a - x_b| with a numeric weight.
struct KernelTerm {
  double coefficient = 1.0;
  std::vector<std::pair<int, int>> distances;
};

/// The order-j kernel K_j (variables 0..j-1) without its prefactor:
///   j=1  1
///   j=2  |x-y|
///   j=3  (|x-y| + |y-z| + |z-x|)^2
///   j=4  |x-y|^3 + 6|x-y|^2|x-z| + 3|x-y|^2|z-t| + 6|x-y||x-z||z-t|
std::vector<KernelTerm> t_kernel(int j);
/// 1/2, 1/4, 1/48, 1/96.
double t_prefactor(int j);

/// Relabels kernel variables: slot a becomes perm[a].
std::vector<KernelTerm> relabel(const std::vector<KernelTerm>& kernel, const std::vector<int>& perm);

/// Integral over the domain^j of v(x_1)...v(x_j) K(x). The cube is split
/// into the j! ordered simplices; on each one every |x_a - x_b| is a sum of
/// consecutive gaps, so K becomes a polynomial in the gaps and the
/// simplex integral is an iterated Volterra chain evaluated panel by panel.
double simplex_integral(const std::function<double(double)>& v, const std::vector<KernelTerm>& kernel, int j,
                        const IntegrationDomain& dom, int gl_order);

struct WCoefficients {
  std::array<double, 4> w{};      // -(-eps)^(1/2) = sum_j w_j lambda^j
  std::array<double, 4> error{};  // |difference between refinements|
};

/// w_j for j in 1..4, evaluated at gl_order and at 3/2 gl_order.
/// Throws NumericalError("quadrature not converged: ...") naming both values
/// if they differ by more than tolerance * max(1, |w|). The delta well is
/// handled analytically: w = (-1/2, 0, 0, 0).
double w_coefficient(const ModelSpec& model, int j, const IntegrationDomain& dom, double* error = nullptr);

WCoefficients w_coefficients(const ModelSpec& model, const IntegrationDomain& dom);
WCoefficients w_coefficients(const ModelSpec& model);

/// eps = -(sum w_j lambda^j)^2 through lambda^5.
EnergySeries energy_series_from_w(ModelId model, const WCoefficients& w);

}  // namespace shortwell
