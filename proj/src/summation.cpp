#include "shortwell/summation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "shortwell/error.hpp"

namespace shortwell {

namespace {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
double magnitude(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(v);
  } else {
    return std::abs(v.to_double());
  }
}

template <class T>
bool negligible(const T& v, double scale) {
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(v) <= 1e-12 * scale;
  } else {
    (void)scale;
    return v.is_zero();
  }
}

template <class T>
double max_entry(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& row : a) {
    for (const auto& v : row) m = std::max(m, magnitude(v));
  }
  return m;
}

// Reduced row echelon form in place; returns the pivot column of each
// pivot row. Exact for rationals, partial pivoting for doubles.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a, std::size_t cols) {
  const double scale = std::max(max_entry(a), 1e-300);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t best = a.size();
    double best_mag = 0.0;
    for (std::size_t i = row; i < a.size(); ++i) {
      if (negligible(a[i][col], scale)) continue;
      const double m = magnitude(a[i][col]);
      if (best == a.size() || (std::is_same_v<T, double> && m > best_mag)) {
        best = i;
        best_mag = m;
        if constexpr (!std::is_same_v<T, double>) break;
      }
    }
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    const T inv = T(1) / a[row][col];
    for (auto& v : a[row]) v = v * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == T(0)) continue;
      const T factor = a[i][col];
      for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] -= factor * a[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Solves the square system A x = b, or returns nothing when A is singular.
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> a, const std::vector<T>& b) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, n);
  if (pivots.size() < n) return std::nullopt;
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

template <class T>
std::vector<std::vector<T>> null_space(Matrix<T> a, std::size_t cols) {
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> x(cols, T(0));
    x[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class T>
std::vector<double> to_doubles(const std::vector<T>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<T, double>) {
      out[i] = v[i];
    } else {
      out[i] = v[i].to_double();
    }
  }
  return out;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

template <class T>
T coeff(const TruncatedSeries<T>& s, long k) {
  return k < 0 ? T(0) : s[static_cast<std::size_t>(k)];
}

template <class T>
PadeApproximant pade_impl(const TruncatedSeries<T>& s, int l_deg, int m_deg) {
  if (l_deg < 0 || m_deg < 0) throw InvalidInput("degrees must be non-negative");
  if (s.order() < static_cast<std::size_t>(l_deg + m_deg)) throw InvalidInput("series order below L+M");
  PadeApproximant out;
  out.numerator_degree = l_deg;
  out.requested_denominator_degree = m_deg;
  for (int m = m_deg; m >= (m_deg == 0 ? 0 : 1); --m) {
    std::vector<T> q{T(1)};
    if (m > 0) {
      Matrix<T> a(static_cast<std::size_t>(m), std::vector<T>(static_cast<std::size_t>(m)));
      std::vector<T> b(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        const long row = l_deg + 1 + i;
        for (int k = 1; k <= m; ++k) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] = coeff(s, row - k);
        b[static_cast<std::size_t>(i)] = -coeff(s, row);
      }
      const auto x = solve(a, b);
      if (!x) continue;
      q.insert(q.end(), x->begin(), x->end());
    }
    std::vector<T> p(static_cast<std::size_t>(l_deg) + 1, T(0));
    for (int i = 0; i <= l_deg; ++i) {
      for (int k = 0; k <= std::min(i, m); ++k) p[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(k)] * coeff(s, i - k);
    }
    out.denominator_degree = m;
    out.numerator = to_doubles(p);
    out.denominator = to_doubles(q);
    if constexpr (!std::is_same_v<T, double>) {
      out.exact_numerator = p;
      out.exact_denominator = q;
    }
    return out;
  }
  throw NumericalError("degenerate Pade table entry");
}

template <class T>
QuadraticPade qpade_impl(const TruncatedSeries<T>& s, int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw InvalidInput("degrees must be non-negative");
  const int top = p + q + r + 1;
  if (s.order() < static_cast<std::size_t>(top)) throw InvalidInput("series order below p+q+r+1");
  const auto n = static_cast<std::size_t>(top);
  // f^2 through order top.
  const auto f = s.truncated(n);
  const auto f2 = f * f;
  // Unknown layout: P_0..P_p, Q_0..Q_q, R_0..R_r.
  const std::size_t cols = static_cast<std::size_t>(p + q + r + 3);
  Matrix<T> a(n + 1, std::vector<T>(cols, T(0)));
  for (std::size_t k = 0; k <= n; ++k) {
    if (k <= static_cast<std::size_t>(p)) a[k][k] = T(1);
    for (int i = 0; i <= q; ++i) {
      if (static_cast<std::size_t>(i) <= k) a[k][static_cast<std::size_t>(p + 1 + i)] = f[k - static_cast<std::size_t>(i)];
    }
    for (int i = 0; i <= r; ++i) {
      if (static_cast<std::size_t>(i) <= k) a[k][static_cast<std::size_t>(p + q + 2 + i)] = f2[k - static_cast<std::size_t>(i)];
    }
  }
  const auto basis = null_space(a, cols);
  if (basis.empty()) throw NumericalError("degenerate system");
  std::vector<T> x = basis.front();

  // Normalize on the first nonzero coefficient of R, else of Q.
  const double scale = std::max(1e-300, [&] {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, magnitude(v));
    return m;
  }());
  std::optional<T> norm;
  for (int i = 0; i <= r && !norm; ++i) {
    const auto& v = x[static_cast<std::size_t>(p + q + 2 + i)];
    if (!negligible(v, scale)) norm = v;
  }
  for (int i = 0; i <= q && !norm; ++i) {
    const auto& v = x[static_cast<std::size_t>(p + 1 + i)];
    if (!negligible(v, scale)) norm = v;
  }
  if (!norm) throw NumericalError("degenerate system");
  for (auto& v : x) v = v / *norm;

  QuadraticPade out;
  out.p_degree = p;
  out.q_degree = q;
  out.r_degree = r;
  out.null_space_dimension = static_cast<int>(basis.size());
  const std::vector<T> pp(x.begin(), x.begin() + p + 1);
  const std::vector<T> qq(x.begin() + p + 1, x.begin() + p + q + 2);
  const std::vector<T> rr(x.begin() + p + q + 2, x.end());
  out.p = to_doubles(pp);
  out.q = to_doubles(qq);
  out.r = to_doubles(rr);
  if constexpr (!std::is_same_v<T, double>) {
    out.exact_p = pp;
    out.exact_q = qq;
    out.exact_r = rr;
  }
  // Pick the square-root sign whose root equals the series at 0.
  const double f0 = magnitude(f[0]) * (f[0] < T(0) ? -1.0 : 1.0);
  double best = 0.0;
  for (int sign : {1, -1}) {
    QuadraticPade trial = out;
    trial.branch = sign;
    double miss = 0.0;
    try {
      miss = std::abs(trial.evaluate(0.0) - f0);
    } catch (const NumericalError&) {
      continue;
    }
    if (!std::isfinite(miss)) continue;
    if (sign == 1 || miss < best) {
      best = miss;
      out.branch = sign;
    }
  }
  return out;
}

}  // namespace

double PadeApproximant::evaluate(double x) const {
  const double d = horner(denominator, x);
  if (d == 0.0) throw NumericalError("pole of the approximant");
  return horner(numerator, x) / d;
}

PadeApproximant pade(const RationalSeries& series, int l_deg, int m_deg) { return pade_impl(series, l_deg, m_deg); }
PadeApproximant pade(const FloatSeries& series, int l_deg, int m_deg) { return pade_impl(series, l_deg, m_deg); }

double QuadraticPade::evaluate(double x) const {
  const double pv = horner(p, x);
  const double qv = horner(q, x);
  const double rv = horner(r, x);
  const double s = static_cast<double>(branch);
  if (rv == 0.0) {
    if (qv == 0.0) throw NumericalError("degenerate system");
    return -pv / qv;
  }
  const double disc = qv * qv - 4.0 * pv * rv;
  if (disc < 0.0) {
    std::ostringstream msg;
    msg.precision(17);
    const double re = -qv / (2.0 * rv);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(rv));
    msg << "complex branch: roots " << re << " +- " << im << "i";
    throw NumericalError(msg.str());
  }
  const double root = s * std::sqrt(disc);
  // Avoid cancellation: pick the form in which -Q and s sqrt(D) add.
  if ((-qv >= 0.0) == (root >= 0.0)) return (-qv + root) / (2.0 * rv);
  const double denom = -qv - root;
  if (denom == 0.0) throw NumericalError("degenerate system");
  return 2.0 * pv / denom;
}

QuadraticPade quadratic_pade(const RationalSeries& series, int p, int q, int r) { return qpade_impl(series, p, q, r); }
QuadraticPade quadratic_pade(const FloatSeries& series, int p, int q, int r) { return qpade_impl(series, p, q, r); }

double TwoPointPade::evaluate_u(double u) const {
  const double d = horner(denominator, u);
  if (d == 0.0) throw NumericalError("pole of the approximant");
  return horner(numerator, u) / d;
}

double TwoPointPade::evaluate(double lambda) const {
  if (lambda < 0.0) throw InvalidInput("two-point approximant needs lambda >= 0");
  return evaluate_u(std::sqrt(lambda));
}

double TwoPointPade::leading_coefficient() const { return numerator.back() / denominator.back(); }

TwoPointPade two_point_pade(const RationalSeries& series, const std::vector<BigRational>& asymptotic, int p_small,
                            int q_large) {
  if (p_small < 0 || q_large < 1) throw InvalidInput("need p_small >= 0 and q_large >= 1");
  const int free = p_small + q_large;
  if (free < 3 || free % 2 == 0) throw InvalidInput("p_small + q_large must be odd and at least 3");
  if (static_cast<int>(asymptotic.size()) < q_large) throw InvalidInput("not enough asymptotic coefficients");
  const int m = (free - 3) / 2;
  const int deg_n = m + 2;
  // Series in u: f_u[2j] = c_j.
  const int need = std::max(p_small - 1, 0);
  if (2 * static_cast<int>(series.order()) < need) throw InvalidInput("series order below p_small");
  auto fu = [&](int k) -> BigRational {
    if (k < 0 || k % 2 != 0) return BigRational(0);
    return series[static_cast<std::size_t>(k / 2)];
  };
  auto b = [&](int k) -> BigRational {
    return (k >= 0 && k < static_cast<int>(asymptotic.size())) ? asymptotic[static_cast<std::size_t>(k)] : BigRational(0);
  };
  // Unknowns: n_0..n_{m+2}, d_1..d_m (d_0 = 1).
  const std::size_t cols = static_cast<std::size_t>(deg_n + 1 + m);
  auto d_col = [&](int i) { return static_cast<std::size_t>(deg_n + i); };  // i >= 1
  Matrix<BigRational> a;
  std::vector<BigRational> rhs;
  // Small u: n_k - sum_i d_i f_{k-i} = f_k (d_0 term moved right).
  for (int k = 0; k < p_small; ++k) {
    std::vector<BigRational> row(cols, BigRational(0));
    if (k <= deg_n) row[static_cast<std::size_t>(k)] = BigRational(1);
    for (int i = 1; i <= m; ++i) row[d_col(i)] = -fu(k - i);
    a.push_back(row);
    rhs.push_back(fu(k));
  }
  // Large u: n_t = sum_k d_{t-2+k} b_k for t = m+2 down to m+3-q_large.
  for (int step = 0; step < q_large; ++step) {
    const int t = deg_n - step;
    std::vector<BigRational> row(cols, BigRational(0));
    BigRational constant(0);
    if (t >= 0) row[static_cast<std::size_t>(t)] = BigRational(1);
    for (int k = 0; k < q_large; ++k) {
      const int idx = t - 2 + k;
      if (idx == 0) {
        constant += b(k);
      } else if (idx >= 1 && idx <= m) {
        row[d_col(idx)] -= b(k);
      }
    }
    a.push_back(row);
    rhs.push_back(constant);
  }
  const auto x = solve(a, rhs);
  if (!x) throw NumericalError("no two-point approximant at these orders");
  std::vector<BigRational> num(x->begin(), x->begin() + deg_n + 1);
  std::vector<BigRational> den{BigRational(1)};
  den.insert(den.end(), x->begin() + deg_n + 1, x->end());
  if (den.back().is_zero() || num.back().is_zero()) throw NumericalError("no two-point approximant at these orders");
  TwoPointPade out;
  out.p_small = p_small;
  out.q_large = q_large;
  out.numerator = to_doubles(num);
  out.denominator = to_doubles(den);
  out.exact_numerator = std::move(num);
  out.exact_denominator = std::move(den);
  return out;
}

RadiusEstimate radius_estimate(const FloatSeries& series) {
  const auto c = series.coefficients();
  // Longest run of nonzero coefficients ending at the top order.
  std::size_t start = c.size();
  while (start > 0 && c[start - 1] != 0.0) --start;
  const std::size_t run = c.size() - start;
  if (run < 10) {
    throw NumericalError("no reliable estimate: " + std::to_string(run) + " consecutive nonzero tail coefficients, need 10");
  }
  std::vector<double> ratio(c.size(), 0.0);
  for (std::size_t j = start + 1; j < c.size(); ++j) ratio[j] = c[j] / c[j - 1];

  // Sign pattern over the upper half of the run.
  const std::size_t half = start + run / 2;
  int sign = 0;
  for (std::size_t j = half; j < c.size(); ++j) {
    const int s = ratio[j] > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) throw NumericalError("no reliable estimate: coefficient signs neither constant nor alternating");
  }

  RadiusEstimate out;
  out.singularity_sign = sign;
  for (std::size_t j = start + 2; j < c.size(); ++j) {
    const double jj = static_cast<double>(j);
    out.intercepts.push_back(jj * ratio[j] - (jj - 1.0) * ratio[j - 1]);
  }
  const double last = out.intercepts.back();
  // The last few intercepts must agree to within 5 percent.
  const std::size_t tail = std::min<std::size_t>(4, out.intercepts.size());
  for (std::size_t i = out.intercepts.size() - tail; i < out.intercepts.size(); ++i) {
    if (!(std::abs(out.intercepts[i] - last) <= 0.05 * std::abs(last))) {
      std::ostringstream msg;
      msg << "no reliable estimate: intercepts";
      for (std::size_t k = out.intercepts.size() - tail; k < out.intercepts.size(); ++k) msg << ' ' << out.intercepts[k];
      throw NumericalError(msg.str());
    }
  }
  if (last == 0.0) throw NumericalError("no reliable estimate: zero intercept");
  out.radius = 1.0 / std::abs(last);
  return out;
}

RadiusEstimate radius_estimate(const RationalSeries& series) { return radius_estimate(series.to_float()); }

}  // namespace shortwell
