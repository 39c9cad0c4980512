#include "shortwell/tmethod.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "shortwell/error.hpp"
#include "shortwell/quadrature.hpp"

namespace shortwell {

namespace {

// Polynomial in the gaps g_0..g_{j-2} of an ordered tuple, keyed by the
// exponent vector. Coefficients are small integers, exact in binary64.
using GapPoly = std::map<std::vector<int>, double>;

GapPoly multiply(const GapPoly& a, const GapPoly& b) {
  GapPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out[e] += ca * cb;
    }
  }
  return out;
}

// Sum over all j! placements of the kernel variables on an ordered tuple.
GapPoly symmetrized_kernel(const std::vector<KernelTerm>& kernel, int j) {
  const std::size_t gaps = static_cast<std::size_t>(std::max(j - 1, 0));
  GapPoly total;
  std::vector<int> rank(static_cast<std::size_t>(j));
  std::iota(rank.begin(), rank.end(), 0);
  do {
    for (const auto& term : kernel) {
      GapPoly p{{std::vector<int>(gaps, 0), term.coefficient}};
      for (const auto& [a, b] : term.distances) {
        const int lo = std::min(rank[static_cast<std::size_t>(a)], rank[static_cast<std::size_t>(b)]);
        const int hi = std::max(rank[static_cast<std::size_t>(a)], rank[static_cast<std::size_t>(b)]);
        GapPoly linear;
        for (int g = lo; g < hi; ++g) {
          std::vector<int> e(gaps, 0);
          e[static_cast<std::size_t>(g)] = 1;
          linear[e] = 1.0;
        }
        p = multiply(p, linear);
      }
      for (const auto& [e, c] : p) total[e] += c;
    }
  } while (std::next_permutation(rank.begin(), rank.end()));
  return total;
}

struct Panel {
  double a;
  double b;
};

std::vector<Panel> make_panels(const IntegrationDomain& dom) {
  std::vector<double> edges{-dom.cutoff, dom.cutoff};
  for (double p : dom.breakpoints) {
    if (p < 0.0 || p >= dom.cutoff) throw InvalidInput("breakpoint outside the domain");
    edges.push_back(p);
    edges.push_back(-p);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (dom.subdivisions < 1) throw InvalidInput("subdivisions must be positive");
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double h = (edges[i + 1] - edges[i]) / dom.subdivisions;
    for (int s = 0; s < dom.subdivisions; ++s) {
      const double a = edges[i] + s * h;
      const double b = (s + 1 == dom.subdivisions) ? edges[i + 1] : a + h;
      panels.push_back({a, b});
    }
  }
  return panels;
}

// Lagrange basis on the reference nodes, barycentric form.
struct Interpolator {
  std::vector<double> nodes;
  std::vector<double> bary;

  explicit Interpolator(const std::vector<double>& x) : nodes(x), bary(x.size(), 1.0) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (k != j) bary[j] /= (x[j] - x[k]);
      }
    }
  }

  // Fills ell[j] = l_j(t).
  void basis(double t, std::vector<double>& ell) const {
    ell.assign(nodes.size(), 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (t == nodes[j]) {
        ell[j] = 1.0;
        return;
      }
    }
    double denom = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      ell[j] = bary[j] / (t - nodes[j]);
      denom += ell[j];
    }
    for (double& e : ell) e /= denom;
  }
};

// Grid of panel nodes with the weights needed for Volterra steps
//   h(y_i) = int_{-X}^{y_i} f(t) (y_i - t)^p dt.
class VolterraGrid {
 public:
  VolterraGrid(const IntegrationDomain& dom, int n, int max_power) : n_(static_cast<std::size_t>(n)) {
    const QuadratureRule rule = gauss_legendre(n);
    panels_ = make_panels(dom);
    for (std::size_t k = 0; k < panels_.size(); ++k) {
      const double half = 0.5 * (panels_[k].b - panels_[k].a);
      for (std::size_t i = 0; i < n_; ++i) {
        x_.push_back(panels_[k].a + half * (1.0 + rule.nodes[i]));
        w_.push_back(half * rule.weights[i]);
      }
    }
    // partial_[p][i * n + j] = int_{-1}^{tau_i} l_j(tau) (tau_i - tau)^p dtau
    const Interpolator interp(rule.nodes);
    std::vector<double> ell;
    partial_.assign(static_cast<std::size_t>(max_power) + 1, std::vector<double>(n_ * n_, 0.0));
    for (std::size_t i = 0; i < n_; ++i) {
      const double ti = rule.nodes[i];
      const double half = 0.5 * (ti + 1.0);
      for (std::size_t q = 0; q < n_; ++q) {
        const double s = -1.0 + half * (1.0 + rule.nodes[q]);
        interp.basis(s, ell);
        double pw = half * rule.weights[q];
        for (int p = 0; p <= max_power; ++p) {
          for (std::size_t j = 0; j < n_; ++j) partial_[static_cast<std::size_t>(p)][i * n_ + j] += pw * ell[j];
          pw *= (ti - s);
        }
      }
    }
  }

  [[nodiscard]] const std::vector<double>& nodes() const { return x_; }
  [[nodiscard]] const std::vector<double>& weights() const { return w_; }

  [[nodiscard]] std::vector<double> step(const std::vector<double>& f, int p) const {
    std::vector<double> h(x_.size(), 0.0);
    const auto& part = partial_[static_cast<std::size_t>(p)];
    for (std::size_t k = 0; k < panels_.size(); ++k) {
      const double scale = std::pow(0.5 * (panels_[k].b - panels_[k].a), p + 1);
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t gi = k * n_ + i;
        const double yi = x_[gi];
        double acc = 0.0;
        for (std::size_t gj = 0; gj < k * n_; ++gj) {
          const double d = yi - x_[gj];
          double dp = 1.0;
          for (int e = 0; e < p; ++e) dp *= d;
          acc += w_[gj] * f[gj] * dp;
        }
        double inner = 0.0;
        for (std::size_t j = 0; j < n_; ++j) inner += part[i * n_ + j] * f[k * n_ + j];
        h[gi] = acc + scale * inner;
      }
    }
    return h;
  }

 private:
  std::size_t n_;
  std::vector<Panel> panels_;
  std::vector<double> x_;
  std::vector<double> w_;
  std::vector<std::vector<double>> partial_;
};

constexpr double kNominalTailCutoff[] = {25.0, 0.0, 0.0, 40.0};  // indexed by ModelId

double upper_gamma_over(double q, double rx, double r) {
  // int_X^inf t^q e^{-r t} dt for integer q >= 0, with rx = r X.
  double term = 1.0;
  double sum = 1.0;
  for (int i = 1; i <= static_cast<int>(q); ++i) {
    term *= rx / i;
    sum += term;
  }
  return std::exp(-rx) * std::tgamma(q + 1.0) * sum / std::pow(r, q + 1.0);
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

std::vector<KernelTerm> t_kernel(int j) {
  switch (j) {
    case 1:
      return {{1.0, {}}};
    case 2:
      return {{1.0, {{0, 1}}}};
    case 3:
      return {{1.0, {{0, 1}, {0, 1}}}, {1.0, {{1, 2}, {1, 2}}}, {1.0, {{2, 0}, {2, 0}}},
              {2.0, {{0, 1}, {1, 2}}}, {2.0, {{1, 2}, {2, 0}}}, {2.0, {{2, 0}, {0, 1}}}};
    case 4:
      return {{1.0, {{0, 1}, {0, 1}, {0, 1}}},
              {6.0, {{0, 1}, {0, 1}, {0, 2}}},
              {3.0, {{0, 1}, {0, 1}, {2, 3}}},
              {6.0, {{0, 1}, {0, 2}, {2, 3}}}};
    default:
      throw InvalidInput("order must be in 1..4");
  }
}

double t_prefactor(int j) {
  switch (j) {
    case 1: return 0.5;
    case 2: return 0.25;
    case 3: return 1.0 / 48.0;
    case 4: return 1.0 / 96.0;
    default: throw InvalidInput("order must be in 1..4");
  }
}

std::vector<KernelTerm> relabel(const std::vector<KernelTerm>& kernel, const std::vector<int>& perm) {
  std::vector<KernelTerm> out = kernel;
  for (auto& term : out) {
    for (auto& [a, b] : term.distances) {
      a = perm.at(static_cast<std::size_t>(a));
      b = perm.at(static_cast<std::size_t>(b));
    }
  }
  return out;
}

IntegrationDomain default_domain(ModelId id) {
  IntegrationDomain dom;
  switch (id) {
    case ModelId::square:
      dom.kind = IntegrationDomain::Kind::finite_box;
      dom.cutoff = 1.0;
      return dom;
    case ModelId::exponential:
      dom.kind = IntegrationDomain::Kind::exponential_tail;
      dom.amplitude = 1.0;
      dom.decay_rate = 1.0;
      dom.breakpoints = {0.0, 1.0, 3.0, 7.0, 15.0, 31.0};
      break;
    case ModelId::poschl_teller:
      dom.kind = IntegrationDomain::Kind::exponential_tail;
      dom.amplitude = 4.0;  // sech^2 x <= 4 e^{-2|x|}
      dom.decay_rate = 2.0;
      dom.breakpoints = {0.0, 1.0, 2.0, 4.0, 8.0, 16.0};
      break;
    case ModelId::delta:
      throw InvalidInput("delta well has no integration domain (analytic T-integrals)");
  }
  dom.cutoff = kNominalTailCutoff[static_cast<int>(id)];
  while (tail_bound(dom, 4) >= 1e-12) dom.cutoff += 1.0;
  return dom;
}

double tail_bound(const IntegrationDomain& dom, int j) {
  if (dom.kind == IntegrationDomain::Kind::finite_box) return 0.0;
  // Every |x_a - x_b| <= S = sum |x_i|, so K_j <= kappa S^(j-1) with kappa
  // the sum of kernel weights. One variable beyond X (union bound over j),
  // the others free; |v| <= c e^{-r|x|}.
  const double c = dom.amplitude;
  const double r = dom.decay_rate;
  const double rx = r * dom.cutoff;
  const int d = j - 1;
  const int m = j - 1;  // free variables
  double kappa = 0.0;
  for (const auto& t : t_kernel(j)) kappa += t.coefficient;
  double sum = 0.0;
  for (int k = 0; k <= d; ++k) {
    double free_part = 1.0;  // int over the positive orthant of T^k e^{-rT}
    if (m == 0) {
      if (k > 0) continue;
    } else {
      free_part = std::tgamma(k + m) / (std::tgamma(m) * std::pow(r, k + m));
    }
    sum += binomial(d, k) * upper_gamma_over(d - k, rx, r) * free_part;
  }
  return t_prefactor(j) * j * std::pow(2.0 * c, j) * kappa * sum;
}

double simplex_integral(const std::function<double(double)>& v, const std::vector<KernelTerm>& kernel, int j,
                        const IntegrationDomain& dom, int gl_order) {
  if (j < 1) throw InvalidInput("order must be positive");
  const GapPoly poly = symmetrized_kernel(kernel, j);
  int max_power = 0;
  for (const auto& [e, c] : poly) {
    for (int p : e) max_power = std::max(max_power, p);
  }
  const VolterraGrid grid(dom, gl_order, max_power);
  const auto& x = grid.nodes();
  std::vector<double> vx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) vx[i] = v(x[i]);

  double total = 0.0;
  for (const auto& [exponents, coefficient] : poly) {
    if (coefficient == 0.0) continue;
    std::vector<double> f = vx;
    for (int p : exponents) {
      f = grid.step(f, p);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] *= vx[i];
    }
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += grid.weights()[i] * f[i];
    total += coefficient * s;
  }
  return total;
}

double w_coefficient(const ModelSpec& model, int j, const IntegrationDomain& dom, double* error) {
  if (j < 1 || j > 4) throw InvalidInput("order must be in 1..4");
  if (model.id == ModelId::delta) {
    // The delta collapses every integral onto x = 0, where all distances vanish.
    if (error != nullptr) *error = 0.0;
    return j == 1 ? -0.5 : 0.0;
  }
  const ModelId id = model.id;
  const auto v = [id](double x) { return potential(id, x); };
  const auto kernel = t_kernel(j);
  const int refined_order = dom.gl_order + dom.gl_order / 2;
  const double coarse = t_prefactor(j) * simplex_integral(v, kernel, j, dom, dom.gl_order);
  const double fine = t_prefactor(j) * simplex_integral(v, kernel, j, dom, refined_order);
  const double diff = std::abs(fine - coarse);
  if (error != nullptr) *error = diff;
  if (!(diff <= dom.tolerance * std::max(1.0, std::abs(fine)))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "quadrature not converged: " << coarse << " (order " << dom.gl_order << ") vs " << fine << " (order "
        << refined_order << ")";
    throw NumericalError(msg.str());
  }
  return fine;
}

WCoefficients w_coefficients(const ModelSpec& model, const IntegrationDomain& dom) {
  WCoefficients out;
  for (int j = 1; j <= 4; ++j) {
    out.w[static_cast<std::size_t>(j - 1)] = w_coefficient(model, j, dom, &out.error[static_cast<std::size_t>(j - 1)]);
  }
  return out;
}

WCoefficients w_coefficients(const ModelSpec& model) {
  if (model.id == ModelId::delta) return w_coefficients(model, IntegrationDomain{});
  return w_coefficients(model, default_domain(model.id));
}

EnergySeries energy_series_from_w(ModelId model, const WCoefficients& w) {
  if (w.w[0] == 0.0) throw InvalidInput("w1 must be nonzero");
  const auto& c = w.w;
  std::vector<double> eps(6, 0.0);
  eps[2] = -c[0] * c[0];
  eps[3] = -2.0 * c[0] * c[1];
  eps[4] = -(c[1] * c[1] + 2.0 * c[0] * c[2]);
  eps[5] = -2.0 * (c[0] * c[3] + c[1] * c[2]);
  EnergySeries out = make_float_series(model, SeriesMethod::tmethod, FloatSeries("lambda", std::move(eps)));
  for (int j = 0; j < 4; ++j) out.parameters.emplace_back("w" + std::to_string(j + 1) + "_error", w.error[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace shortwell
