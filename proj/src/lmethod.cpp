#include "shortwell/lmethod.hpp"

#include <cmath>
#include <numbers>

#include "shortwell/error.hpp"

namespace shortwell {

std::size_t PlaneWaveBasis::dimension() const {
  if (n_max < 0) throw InvalidInput("n_max must be non-negative");
  const auto n = static_cast<std::size_t>(n_max);
  return parity == Basis::complex_exp ? 2 * n + 1 : n + 1;
}

long PlaneWaveBasis::label(std::size_t row) const {
  return parity == Basis::complex_exp ? static_cast<long>(row) - n_max : static_cast<long>(row);
}

double PlaneWaveBasis::unperturbed_energy(std::size_t row) const {
  const double q = 2.0 * std::numbers::pi * static_cast<double>(label(row)) / box_length;
  return q * q;
}

namespace {

void check_basis(const PlaneWaveBasis& basis) {
  if (!(basis.box_length > 0.0)) throw InvalidInput("box length must be positive");
  if (basis.n_max < 0) throw InvalidInput("n_max must be non-negative");
}

}  // namespace

DenseMatrix potential_matrix(ModelId id, const PlaneWaveBasis& basis) {
  check_basis(basis);
  const std::size_t dim = basis.dimension();
  const double l = basis.box_length;
  // Every element is built from Vc(k), k = 0..2 n_max.
  std::vector<double> vc(2 * static_cast<std::size_t>(basis.n_max) + 1);
  for (std::size_t k = 0; k < vc.size(); ++k) vc[k] = fourier_cosine(id, l, static_cast<long>(k));

  DenseMatrix v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const long m = basis.label(i);
      const long n = basis.label(j);
      double e = 0.0;
      if (basis.parity == Basis::complex_exp) {
        e = vc[static_cast<std::size_t>(std::abs(m - n))];
      } else if (m == 0 && n == 0) {
        e = vc[0];
      } else if (m == 0 || n == 0) {
        e = std::numbers::sqrt2 * vc[static_cast<std::size_t>(m + n)];
      } else {
        e = vc[static_cast<std::size_t>(std::abs(m - n))] + vc[static_cast<std::size_t>(m + n)];
      }
      v(i, j) = e;
      v(j, i) = e;
    }
  }
  return v;
}

DenseMatrix build_hamiltonian(ModelId id, const PlaneWaveBasis& basis, double lambda) {
  DenseMatrix h = potential_matrix(id, basis);
  const std::size_t dim = h.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) h(i, j) *= lambda;
    h(i, i) += basis.unperturbed_energy(i);
  }
  return h;
}

double ground_energy_diag(ModelId id, const PlaneWaveBasis& basis, double lambda) {
  const DenseMatrix v = potential_matrix(id, basis);
  const std::size_t dim = v.size();
  DenseMatrix h = v;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) h(i, j) *= lambda;
    h(i, i) += basis.unperturbed_energy(i);
  }
  const EigenPair pair = symmetric_eigen_lowest_pair(h);
  const auto& x = pair.vector;
  // Rayleigh quotient split as kinetic + lambda * potential so that the
  // large e_n never meet the small eigenvalue in one rounding step.
  double kinetic = 0.0;
  double potential = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    kinetic += basis.unperturbed_energy(i) * x[i] * x[i];
    norm += x[i] * x[i];
    double row = 0.0;
    for (std::size_t j = 0; j < dim; ++j) row += v(i, j) * x[j];
    potential += x[i] * row;
  }
  return (kinetic + lambda * potential) / norm;
}

double RsptResult::partial_sum(double lambda) const {
  double acc = 0.0;
  for (std::size_t j = coefficients.size(); j-- > 0;) acc = (acc + coefficients[j]) * lambda;
  return acc;
}

RsptResult rspt_coefficients(ModelId id, const PlaneWaveBasis& basis, int order) {
  if (basis.parity == Basis::complex_exp) throw InvalidInput("degenerate unperturbed levels; use even_cosine");
  if (order < 1 || order > 12) throw InvalidInput("order must be in 1..12");
  const DenseMatrix v = potential_matrix(id, basis);
  const std::size_t dim = v.size();

  RsptResult out;
  out.basis_size = dim;
  std::vector<double> psi0(dim, 0.0);
  psi0[0] = 1.0;
  out.wavefunctions.push_back(psi0);
  out.coefficients.push_back(v(0, 0));

  const double e0 = basis.unperturbed_energy(0);
  for (int k = 1; k < order; ++k) {
    const auto& prev = out.wavefunctions.back();
    std::vector<double> psi(dim, 0.0);
    for (std::size_t i = 1; i < dim; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < dim; ++j) acc += v(i, j) * prev[j];
      for (int m = 1; m <= k; ++m) {
        acc -= out.coefficients[static_cast<std::size_t>(m - 1)] *
               out.wavefunctions[static_cast<std::size_t>(k - m)][i];
      }
      psi[i] = acc / (e0 - basis.unperturbed_energy(i));
    }
    double next = 0.0;
    for (std::size_t j = 0; j < dim; ++j) next += v(0, j) * psi[j];
    out.wavefunctions.push_back(std::move(psi));
    out.coefficients.push_back(next);
  }
  return out;
}

ExtrapolatedCoefficients rspt_extrapolated(ModelId id, double box_length, long n_max, int order) {
  if (n_max < 1) throw InvalidInput("n_max must be positive");
  ExtrapolatedCoefficients out;
  for (long n : {n_max, 2 * n_max, 4 * n_max}) {
    out.n_max_levels.push_back(n);
    const PlaneWaveBasis basis{box_length, n, Basis::even_cosine};
    out.raw.push_back(rspt_coefficients(id, basis, order).coefficients);
  }
  const std::size_t count = static_cast<std::size_t>(order);
  out.value.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double r0 = 2.0 * out.raw[1][j] - out.raw[0][j];
    const double r1 = 2.0 * out.raw[2][j] - out.raw[1][j];
    out.value[j] = (4.0 * r1 - r0) / 3.0;
  }
  return out;
}

std::vector<BlowupRow> blowup_report(ModelId id, const std::vector<double>& box_lengths, int order, long n_max) {
  if (box_lengths.size() < 2) throw InvalidInput("need at least two box lengths");
  if (order < 1) throw InvalidInput("order must be positive");
  std::vector<BlowupRow> rows;
  for (double l : box_lengths) {
    if (!(l > 0.0)) throw InvalidInput("box length must be positive");
    BlowupRow row;
    row.box_length = l;
    row.order = order;
    if (id == ModelId::delta) {
      const BigRational lq = BigRational::from_double(l);
      const RationalSeries s = delta_periodic_series(lq, static_cast<std::size_t>(order));
      row.exact_coefficient = s[static_cast<std::size_t>(order)];
      row.exact_rescaled = *row.exact_coefficient * lq.pow(2 - order);
      row.coefficient = row.exact_coefficient->to_double();
      row.rescaled = row.exact_rescaled->to_double();
    } else {
      row.coefficient = rspt_extrapolated(id, l, n_max, order).value[static_cast<std::size_t>(order - 1)];
      row.rescaled = row.coefficient * std::pow(l, 2 - order);
    }
    rows.push_back(row);
  }
  // Least-squares slope of log|c| against log L.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    const double x = std::log(r.box_length);
    const double y = std::log(std::abs(r.coefficient));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw InvalidInput("box lengths must differ");
  const double slope = (n * sxy - sx * sy) / denom;
  for (auto& r : rows) r.exponent_fit = slope;
  return rows;
}

}  // namespace shortwell
