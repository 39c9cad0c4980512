#include "shortwell/roots.hpp"

#include <cmath>
#include <limits>

#include "shortwell/error.hpp"

namespace shortwell {

namespace {

double checked(const std::function<double(double)>& f, double x, int& count) {
  ++count;
  const double y = f(x);
  if (!std::isfinite(y)) throw NumericalError("evaluation failure");
  return y;
}

}  // namespace

BracketedRoot solve_bracketed(const std::function<double(double)>& f, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!(bracket.lo < bracket.hi)) throw InvalidInput("invalid bracket");

  BracketedRoot out;
  double a = bracket.lo;
  double b = bracket.hi;
  double fa = checked(f, a, out.evaluations);
  double fb = checked(f, b, out.evaluations);

  if (fa == 0.0 || fb == 0.0) {
    out.root = fa == 0.0 ? a : b;
    out.final_bracket = {out.root, out.root};
    return out;
  }
  if ((fa < 0.0) == (fb < 0.0)) throw InvalidInput("invalid bracket");

  // Illinois variant of regula falsi; `side` remembers which end was kept
  // last so its function value can be halved when it sticks.
  int side = 0;
  int stalled = 0;
  double last_width = b - a;
  for (int iter = 0; iter < 400 && (b - a) > tol; ++iter) {
    double x;
    if (stalled >= 2) {
      x = 0.5 * (a + b);
      stalled = 0;
    } else {
      x = (a * fb - b * fa) / (fb - fa);
      if (!(x > a && x < b)) x = 0.5 * (a + b);
    }
    const double fx = checked(f, x, out.evaluations);
    if (fx == 0.0) {
      a = b = x;
      break;
    }
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = x;
      fb = fx;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
    const double width = b - a;
    stalled = width > 0.5 * last_width ? stalled + 1 : 0;
    if (stalled == 0) last_width = width;
  }
  if (b - a > tol) throw NumericalError("no convergence");

  out.final_bracket = {a, b};
  // Report whichever end has the smaller residual.
  const double fa_true = a == b ? 0.0 : std::abs(f(a));
  const double fb_true = a == b ? 0.0 : std::abs(f(b));
  out.root = fa_true <= fb_true ? a : b;
  return out;
}

namespace {

double norm(const Point2& p) { return std::hypot(p[0], p[1]); }

Point2 evaluate(const std::function<Point2(Point2)>& F, const Point2& x) {
  const Point2 y = F(x);
  if (!std::isfinite(y[0]) || !std::isfinite(y[1])) throw NumericalError("evaluation failure");
  return y;
}

}  // namespace

Point2 newton_2d(const std::function<Point2(Point2)>& F, Point2 start, Newton2dOptions options) {
  Point2 x = start;
  Point2 fx = evaluate(F, x);
  double res = norm(fx);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (res <= options.tol) return x;

    std::array<Point2, 2> jac{};  // jac[row][col]
    for (int c = 0; c < 2; ++c) {
      const double h = std::max(1e-6, 1e-6 * std::abs(x[c]));
      Point2 xp = x;
      Point2 xm = x;
      xp[c] += h;
      xm[c] -= h;
      const Point2 fp = evaluate(F, xp);
      const Point2 fm = evaluate(F, xm);
      jac[0][c] = (fp[0] - fm[0]) / (2 * h);
      jac[1][c] = (fp[1] - fm[1]) / (2 * h);
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    const double scale = std::max({std::abs(jac[0][0]), std::abs(jac[0][1]), std::abs(jac[1][0]), std::abs(jac[1][1])});
    if (!(std::abs(det) > 1e-14 * scale * scale)) throw NumericalError("singular system");

    const Point2 step{(jac[1][1] * fx[0] - jac[0][1] * fx[1]) / det,
                      (-jac[1][0] * fx[0] + jac[0][0] * fx[1]) / det};

    double t = 1.0;
    Point2 trial{};
    Point2 ftrial{};
    double trial_res = std::numeric_limits<double>::infinity();
    for (int halvings = 0; halvings < 40; ++halvings, t *= 0.5) {
      trial = {x[0] - t * step[0], x[1] - t * step[1]};
      try {
        ftrial = evaluate(F, trial);
      } catch (const NumericalError&) {
        continue;
      }
      trial_res = norm(ftrial);
      if (trial_res <= res) break;
    }
    if (!std::isfinite(trial_res)) throw NumericalError("evaluation failure");
    x = trial;
    fx = ftrial;
    res = trial_res;
  }
  if (res <= options.tol) return x;
  throw NumericalError("no convergence");
}

}  // namespace shortwell
