#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shortwell/implicit.hpp"
#include "shortwell/rational.hpp"
#include "shortwell/roots.hpp"
#include "shortwell/series.hpp"

namespace shortwell {

/// The four exactly solvable wells, v(x) in dimensionless form:
///   poschl_teller  -sech^2 x
///   square         -1 for |x| <= 1, else 0
///   delta          -delta(x)
///   exponential    -exp(-|x|)
enum class ModelId { poschl_teller, square, delta, exponential };

std::string_view to_string(ModelId id);
/// Parses the stable identifiers "poschl_teller", "square", "delta", "exponential".
ModelId parse_model_id(std::string_view name);

struct ModelSpec {
  ModelId id = ModelId::square;
  double lambda = 0.0;                // strength, >= 0
  std::optional<double> box_length;   // L: periodic box (delta, L-method)
  std::optional<double> beta;         // attached -beta*delta(x) (square well only)

  /// Throws InvalidInput on negative strength or non-positive L / beta.
  void validate() const;
};

/// v(x); not defined for the delta model.
double potential(ModelId id, double x);

// ---------------------------------------------------------------------------
// Physical <-> dimensionless scaling

struct ScalingMap {
  double mass = 1.0;
  double depth = 1.0;         // V0
  double length_scale = 1.0;  // gamma (1/b for the exponential well)
  double hbar = 1.0;
};

enum class ScaleDirection { to_dimensionless, to_physical };

/// lambda = 2 m gamma^2 V0 / hbar^2.
double strength(const ScalingMap& s);
/// Energy conversion E <-> eps = 2 m gamma^2 E / hbar^2.
double scale(ScaleDirection dir, const ScalingMap& s, double value);

// ---------------------------------------------------------------------------
// Quantization conditions

/// Which unknown the analytic residual is written in.
enum class Unknown { energy, bessel_order };  // eps, or nu = 2 sqrt(-eps)

struct QuantizationForm {
  ModelSpec model;
  Unknown unknown = Unknown::energy;
  /// F(unknown, lambda), analytic in both arguments near the ground branch.
  std::function<double(double, double)> analytic_residual;
  /// Ground-state bracket in the unknown at the model's lambda.
  Bracket ground_bracket;
};

QuantizationForm quantization_form(const ModelSpec& model);

/// Analytic residual in the model's unknown at an arbitrary (possibly
/// negative) strength; used for branch-point location.
double recast_residual(const ModelSpec& model, double unknown, double lambda);

/// F(eps) at the model's lambda. Throws InvalidInput("outside physical
/// branch") unless -lambda <= eps <= 0 (eps <= 0 for the delta well), and
/// NumericalError("evaluation failure") if a series sum does not settle.
double residual(const ModelSpec& model, double eps);

/// Exact (or exactly characterized) eigenvalue with quantum number n.
/// Poschl-Teller uses the closed form for any n < xi - 1; the delta well
/// gives -lambda^2/4 (or the periodic root when L is set); square and
/// exponential solve for the even ground state (n = 0).
double exact_eigenvalue(const ModelSpec& model, int n = 0);

// ---------------------------------------------------------------------------
// Periodic box

enum class Basis { complex_exp, even_cosine };

/// (1/L) * integral over the box of v(x) cos(2 pi k x / L); the complex
/// plane-wave element <m|v|n> equals this for k = m - n.
double fourier_cosine(ModelId id, double box_length, long k);

/// <m|v|n> in the plane-wave basis (m, n signed) or the parity-adapted
/// cosine basis phi_0 = 1/sqrt(L), phi_n = sqrt(2/L) cos(2 pi n x / L).
double matrix_element(const ModelSpec& model, long m, long n, Basis basis);

/// Root of k = (lambda/2) coth(k L / 2), returned as eps = -k^2.
double delta_periodic_energy(double lambda, double box_length);
/// Root of the Neumann-box condition 2 k tanh(k L / 2) = lambda, as -k^2.
double delta_neumann_energy(double lambda, double box_length);
/// First `count` coefficients of (1 + x)^2 / (1 - x)^2 = 1 + 4x + 8x^2 + ...
std::vector<BigRational> delta_error_expansion(std::size_t count);

// ---------------------------------------------------------------------------
// Asymptotics and singularities

struct LargeLambda {
  double leading = -1.0;                   // coefficient of lambda
  std::optional<double> sqrt_coefficient;  // coefficient of sqrt(lambda)
  bool taylor_at_origin = false;           // v analytic at x = 0
};

/// eps_n ~ -lambda + (2n + 1) sqrt(lambda v''(0) / 2); only the leading
/// term for wells without a Taylor expansion at the origin.
LargeLambda large_lambda(ModelId id, int n = 0);

struct BranchPoint {
  double epsilon = 0.0;
  double lambda = 0.0;
};

/// Solves F = 0, dF/d(unknown) = 0 with newton_2d.
BranchPoint branch_point(ModelId id);

// ---------------------------------------------------------------------------
// Series relations and exact expansions

/// Exact analytic recasting of the ground-state condition as a relation
/// for newton_implicit_series. For the exponential well the unknown is nu.
SeriesRelation<BigRational> series_relation(ModelId id);
/// k = (lambda/2) coth(kL/2) recast as eps + (lambda/L) sqrtcoth(-eps L^2/4).
SeriesRelation<BigRational> delta_periodic_relation(const BigRational& box_length);

/// Ground-state eps(lambda) through `order`, exact.
RationalSeries ground_state_series(ModelId id, std::size_t order);
/// Same, with the periodic-box delta well at rational L.
RationalSeries delta_periodic_series(const BigRational& box_length, std::size_t order);
/// Constants c_j with eps~(j)(L) = c_j L^(j-2), extracted at L in
/// {5, 10, 20, 40} after checking that the rescaled values coincide.
std::vector<BigRational> delta_rescaled_constants(std::size_t order);

// ---------------------------------------------------------------------------
// Square well with an attached -beta delta(x)

/// Closed forms of the j = 0..3 coefficients of eps(lambda; beta).
double beta_coefficient(int j, double beta);
/// The same expansion to arbitrary order by float-domain Newton on the
/// recast condition around eps0 = -beta^2/4.
FloatSeries beta_series_numeric(double beta, std::size_t order);
/// Richardson extrapolation to beta -> 0 of values at beta, beta/2, beta/4, ...
double richardson_beta_limit(const std::vector<double>& values_at_halving_betas);

}  // namespace shortwell
