#include "shortwell/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "shortwell/error.hpp"
#include "shortwell/kernels.hpp"
#include "shortwell/quadrature.hpp"

namespace shortwell {

using std::numbers::pi;

std::string_view to_string(ModelId id) {
  switch (id) {
    case ModelId::poschl_teller: return "poschl_teller";
    case ModelId::square: return "square";
    case ModelId::delta: return "delta";
    case ModelId::exponential: return "exponential";
  }
  return "unknown";
}

ModelId parse_model_id(std::string_view name) {
  if (name == "poschl_teller") return ModelId::poschl_teller;
  if (name == "square") return ModelId::square;
  if (name == "delta") return ModelId::delta;
  if (name == "exponential") return ModelId::exponential;
  throw InvalidInput("unknown model '" + std::string(name) + "'");
}

void ModelSpec::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidInput("strength must be finite and >= 0");
  if (box_length && !(*box_length > 0.0)) throw InvalidInput("box length must be positive");
  if (beta && !(*beta > 0.0)) throw InvalidInput("beta must be positive");
  if (beta && id != ModelId::square) throw InvalidInput("beta regularization is defined for the square well only");
}

double potential(ModelId id, double x) {
  switch (id) {
    case ModelId::poschl_teller: {
      const double c = std::cosh(x);
      return -1.0 / (c * c);
    }
    case ModelId::square: return std::abs(x) <= 1.0 ? -1.0 : 0.0;
    case ModelId::exponential: return -std::exp(-std::abs(x));
    case ModelId::delta: break;
  }
  throw InvalidInput("the delta well has no pointwise potential");
}

// ---------------------------------------------------------------------------

namespace {

void check_scaling(const ScalingMap& s) {
  if (!(s.mass > 0 && s.depth > 0 && s.length_scale > 0 && s.hbar > 0)) throw InvalidInput("invalid scaling");
}

}  // namespace

double strength(const ScalingMap& s) {
  check_scaling(s);
  return 2.0 * s.mass * s.length_scale * s.length_scale * s.depth / (s.hbar * s.hbar);
}

double scale(ScaleDirection dir, const ScalingMap& s, double value) {
  check_scaling(s);
  const double factor = 2.0 * s.mass * s.length_scale * s.length_scale / (s.hbar * s.hbar);
  return dir == ScaleDirection::to_dimensionless ? value * factor : value / factor;
}

// ---------------------------------------------------------------------------
// Residuals

namespace {

// F(nu, lambda) = 2 lambda sum_m (-lambda)^m / (m! (nu+1)...(nu+m+1))
//                 - nu sum_m (-lambda)^m / (m! (nu+1)...(nu+m)),
// the Bessel condition z0 J_{nu+1}(z0) = nu J_nu(z0) divided by
// lambda^{nu/2} / Gamma(nu+1).
double exponential_residual(double nu, double lambda) {
  double b = 1.0;  // (-lambda)^m / (m! (nu+1)...(nu+m))
  double sum_a = 1.0 / (nu + 1.0);
  double sum_b = 1.0;
  for (int m = 1; m <= 500; ++m) {
    b *= -lambda / (m * (nu + m));
    const double a = b / (nu + m + 1.0);
    sum_a += a;
    sum_b += b;
    if (!std::isfinite(sum_a) || !std::isfinite(sum_b)) break;
    if (std::abs(b) <= 1e-17 * std::abs(sum_b) && std::abs(a) <= 1e-17 * std::abs(sum_a)) {
      return 2.0 * lambda * sum_a - nu * sum_b;
    }
  }
  throw NumericalError("evaluation failure");
}

double beta_residual(double eps, double lambda, double beta) {
  // k (2C - beta S) - beta C - 2 s S with s = lambda + eps, C = cos sqrt s,
  // S = sin sqrt s / sqrt s; the raw condition divided by sqrt(s).
  const double k = std::sqrt(-eps);
  const double s = lambda + eps;
  const double c = cos_sqrt(s);
  const double sn = sinc_sqrt(s);
  return k * (2.0 * c - beta * sn) - beta * c - 2.0 * s * sn;
}

double box_or_throw(const ModelSpec& model) {
  if (!model.box_length) throw InvalidInput("box length required");
  return *model.box_length;
}

// Largest sign change of F(nu) on (0, 2 sqrt(lambda)), scanning downward so
// the deepest (ground) even level is selected.
Bracket exponential_ground_bracket(double lambda) {
  const double top = 2.0 * std::sqrt(lambda);
  constexpr int kCells = 256;
  double hi = top;
  double f_hi = exponential_residual(hi, lambda);
  for (int i = kCells - 1; i >= 0; --i) {
    const double lo = i == 0 ? top * 1e-12 : top * i / kCells;
    const double f_lo = exponential_residual(lo, lambda);
    if ((f_lo < 0) != (f_hi < 0) || f_lo == 0.0) return {lo, hi};
    hi = lo;
    f_hi = f_lo;
  }
  throw NumericalError("no bound state bracket");
}

}  // namespace

double recast_residual(const ModelSpec& model, double x, double lambda) {
  switch (model.id) {
    case ModelId::poschl_teller:
      return x * x + x * (2.0 * lambda + 1.0) + lambda * lambda;
    case ModelId::square:
      if (model.beta) return beta_residual(x, lambda, *model.beta);
      return (lambda + x) * tan_sq_sqrt(lambda + x) + x;
    case ModelId::delta:
      if (model.box_length) {
        const double l = *model.box_length;
        return x + (lambda / l) * sqrtcoth(-x * l * l / 4.0);
      }
      return x + lambda * lambda / 4.0;
    case ModelId::exponential:
      return exponential_residual(x, lambda);
  }
  throw InvalidInput("unknown model");
}

QuantizationForm quantization_form(const ModelSpec& model) {
  model.validate();
  QuantizationForm form;
  form.model = model;
  form.analytic_residual = [model](double x, double lambda) { return recast_residual(model, x, lambda); };
  const double lam = model.lambda;
  switch (model.id) {
    case ModelId::poschl_teller:
      form.ground_bracket = {-lam, 0.0};
      break;
    case ModelId::square: {
      const double edge = (pi / 2) * (pi / 2) * (1.0 - 1e-12) - lam;
      form.ground_bracket = {-lam, std::min(0.0, edge)};
      break;
    }
    case ModelId::delta:
      if (model.box_length) {
        const double l = *model.box_length;
        const double k_hi = 0.5 * lam / std::tanh(lam * l / 8.0) + 1.0;
        form.ground_bracket = {-k_hi * k_hi, -lam * lam / 4.0};
      } else {
        form.ground_bracket = {-lam * lam / 4.0 - 1.0, 0.0};
      }
      break;
    case ModelId::exponential:
      form.unknown = Unknown::bessel_order;
      form.ground_bracket = lam > 0 ? exponential_ground_bracket(lam) : Bracket{0.0, 0.0};
      break;
  }
  return form;
}

double residual(const ModelSpec& model, double eps) {
  model.validate();
  const double lam = model.lambda;
  const double slack = 1e-14 * std::max(1.0, lam);
  const bool below_top = eps <= slack;
  const bool above_floor = model.id == ModelId::delta || model.beta || eps >= -lam - slack;
  if (!below_top || !above_floor) throw InvalidInput("outside physical branch");
  eps = std::min(eps, 0.0);
  if (model.id == ModelId::exponential) return exponential_residual(2.0 * std::sqrt(-eps), lam);
  return recast_residual(model, eps, lam);
}

double exact_eigenvalue(const ModelSpec& model, int n) {
  model.validate();
  const double lam = model.lambda;
  if (n < 0) throw InvalidInput("no such bound state");
  switch (model.id) {
    case ModelId::poschl_teller: {
      const double xi = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * lam));
      if (!(n < xi - 1.0) && !(n == 0 && lam == 0.0)) throw InvalidInput("no such bound state");
      const double d = xi - n - 1.0;
      return -d * d;
    }
    case ModelId::delta:
      if (n != 0) throw InvalidInput("no such bound state");
      if (model.box_length) return delta_periodic_energy(lam, *model.box_length);
      return -lam * lam / 4.0;
    case ModelId::square: {
      if (n != 0) throw InvalidInput("no such bound state");
      if (model.beta) throw InvalidInput("not available");
      if (lam == 0.0) return 0.0;
      const auto form = quantization_form(model);
      auto f = [&](double e) { return form.analytic_residual(e, lam); };
      return solve_bracketed(f, form.ground_bracket, 1e-15 * std::max(1.0, lam)).root;
    }
    case ModelId::exponential: {
      if (n != 0) throw InvalidInput("no such bound state");
      if (lam == 0.0) return 0.0;
      const auto form = quantization_form(model);
      auto f = [&](double nu) { return exponential_residual(nu, lam); };
      const double nu = solve_bracketed(f, form.ground_bracket, 1e-15 * std::max(1.0, lam)).root;
      return -nu * nu / 4.0;
    }
  }
  throw InvalidInput("unknown model");
}

// ---------------------------------------------------------------------------
// Periodic box

namespace {

// (2/L) * integral_0^{L/2} -sech^2(x) cos(q x) dx by composite Gauss-Legendre
// with panels short enough to resolve both the oscillation and the decay.
double poschl_teller_fourier(double box_length, double q) {
  static const QuadratureRule rule = gauss_legendre(16);
  const double half = box_length / 2.0;
  double width = 0.5;
  if (q > 0) width = std::min(width, pi / q);
  const int panels = static_cast<int>(std::ceil(half / width));
  const double h = half / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    sum += integrate(rule, p * h, (p + 1) * h, [q](double x) {
      const double c = std::cosh(x);
      return -std::cos(q * x) / (c * c);
    });
  }
  return 2.0 * sum / box_length;
}

}  // namespace

double fourier_cosine(ModelId id, double box_length, long k) {
  if (!(box_length > 0.0)) throw InvalidInput("box length must be positive");
  const double q = 2.0 * pi * static_cast<double>(std::abs(k)) / box_length;
  switch (id) {
    case ModelId::delta:
      return -1.0 / box_length;
    case ModelId::square:
      if (!(box_length > 2.0)) throw InvalidInput("well exceeds box");
      if (k == 0) return -2.0 / box_length;
      return -2.0 * std::sin(q) / (q * box_length);
    case ModelId::exponential: {
      const double parity = (k % 2 == 0) ? 1.0 : -1.0;
      return -2.0 * (1.0 - parity * std::exp(-box_length / 2.0)) / ((1.0 + q * q) * box_length);
    }
    case ModelId::poschl_teller:
      return poschl_teller_fourier(box_length, q);
  }
  throw InvalidInput("not available");
}

double matrix_element(const ModelSpec& model, long m, long n, Basis basis) {
  const double l = box_or_throw(model);
  if (basis == Basis::complex_exp) return fourier_cosine(model.id, l, m - n);
  if (m < 0 || n < 0) throw InvalidInput("cosine basis indices are non-negative");
  if (m == 0 && n == 0) return fourier_cosine(model.id, l, 0);
  if (m == 0 || n == 0) return std::numbers::sqrt2 * fourier_cosine(model.id, l, m + n);
  return fourier_cosine(model.id, l, m - n) + fourier_cosine(model.id, l, m + n);
}

double delta_periodic_energy(double lambda, double box_length) {
  if (!(lambda > 0.0) || !(box_length > 0.0)) throw InvalidInput("lambda and L must be positive");
  auto g = [&](double k) { return k - 0.5 * lambda / std::tanh(0.5 * k * box_length); };
  const double lo = 0.5 * lambda;
  const double hi = 0.5 * lambda / std::tanh(lambda * box_length / 8.0) + 1.0;
  const double k = solve_bracketed(g, {lo, hi}, 1e-15 * std::max(1.0, lambda)).root;
  return -k * k;
}

double delta_neumann_energy(double lambda, double box_length) {
  if (!(lambda > 0.0) || !(box_length > 0.0)) throw InvalidInput("lambda and L must be positive");
  auto g = [&](double k) { return 2.0 * k * std::tanh(0.5 * k * box_length) - lambda; };
  const double hi = 0.5 * lambda / std::tanh(lambda * box_length / 8.0) + 1.0;
  const double k = solve_bracketed(g, {0.5 * lambda, hi}, 1e-15 * std::max(1.0, lambda)).root;
  return -k * k;
}

std::vector<BigRational> delta_error_expansion(std::size_t count) {
  if (count == 0) return {};
  const std::size_t order = count - 1;
  const auto one_plus = RationalSeries::identity("x", order) + BigRational(1);
  const auto one_minus = BigRational(1) - RationalSeries::identity("x", order);
  const auto ratio = (one_plus * one_plus) / (one_minus * one_minus);
  return {ratio.coefficients().begin(), ratio.coefficients().end()};
}

// ---------------------------------------------------------------------------

LargeLambda large_lambda(ModelId id, int n) {
  if (n < 0) throw InvalidInput("no such bound state");
  LargeLambda out;
  if (id == ModelId::poschl_teller) {
    constexpr double kCurvature = 2.0;  // v''(0) for -sech^2
    out.taylor_at_origin = true;
    out.sqrt_coefficient = (2.0 * n + 1.0) * std::sqrt(kCurvature / 2.0);
  }
  return out;
}

namespace {

double partial_unknown(const ModelSpec& model, double x, double lambda) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  auto f = [&](double t) { return recast_residual(model, t, lambda); };
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

Point2 exponential_branch_start(const ModelSpec& model) {
  Point2 best{};
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 40; ++i) {
    const double lambda = -0.01 * i;
    for (int j = -19; j <= 19; ++j) {
      const double nu = 0.05 * j;
      const double v = std::abs(recast_residual(model, nu, lambda)) + std::abs(partial_unknown(model, nu, lambda));
      if (v < best_value) {
        best_value = v;
        best = {nu, lambda};
      }
    }
  }
  return best;
}

}  // namespace

BranchPoint branch_point(ModelId id) {
  ModelSpec model;
  model.id = id;
  Point2 start{};
  switch (id) {
    case ModelId::poschl_teller: start = {-0.2, -0.2}; break;
    case ModelId::square: start = {-0.9, -0.4}; break;
    case ModelId::exponential: start = exponential_branch_start(model); break;
    case ModelId::delta: throw InvalidInput("not available");
  }
  auto system = [&](Point2 p) -> Point2 {
    return {recast_residual(model, p[0], p[1]), partial_unknown(model, p[0], p[1])};
  };
  const Point2 root = newton_2d(system, start, {.tol = 1e-11});
  BranchPoint out{.epsilon = root[0], .lambda = root[1]};
  if (id == ModelId::exponential) out.epsilon = -root[0] * root[0] / 4.0;
  return out;
}

}  // namespace shortwell
