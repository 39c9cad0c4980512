#include "shortwell/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "shortwell/error.hpp"

namespace shortwell {

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

bool DenseMatrix::is_symmetric(double rel_tol) const {
  const double limit = rel_tol * frobenius_norm();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > limit) return false;
    }
  }
  return true;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) s += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(s);
}

// Applies the rotation that annihilates a(p, q), updating only the upper
// triangle plus the diagonal (the lower triangle is never read).
void rotate(DenseMatrix& a, std::size_t p, std::size_t q, DenseMatrix* v) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;

  const std::size_t n = a.size();
  auto at = [&a](std::size_t i, std::size_t j) -> double& { return i < j ? a(i, j) : a(j, i); };
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    double& arp = at(r, p);
    double& arq = at(r, q);
    const double g = arp;
    const double h = arq;
    arp = g - s * (h + g * tau);
    arq = h + s * (g - h * tau);
  }
  if (v == nullptr) return;
  for (std::size_t r = 0; r < n; ++r) {
    const double g = (*v)(r, p);
    const double h = (*v)(r, q);
    (*v)(r, p) = g - s * (h + g * tau);
    (*v)(r, q) = h + s * (g - h * tau);
  }
}

DenseMatrix diagonalize(const DenseMatrix& m, DenseMatrix* v = nullptr) {
  if (!m.is_symmetric()) throw InvalidInput("not symmetric");
  DenseMatrix a = m;
  const std::size_t n = a.size();
  const double target = 1e-13 * m.frobenius_norm();
  if (v != nullptr) {
    *v = DenseMatrix(n);
    for (std::size_t i = 0; i < n; ++i) (*v)(i, i) = 1.0;
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= target) return a;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, p, q, v);
      }
    }
  }
  if (off_diagonal_norm(a) <= target) return a;
  throw NumericalError("no convergence");
}

}  // namespace

double symmetric_eigen_lowest(const DenseMatrix& m) {
  if (m.size() == 0) throw InvalidInput("empty matrix");
  const DenseMatrix a = diagonalize(m);
  double lowest = a(0, 0);
  for (std::size_t i = 1; i < a.size(); ++i) lowest = std::min(lowest, a(i, i));
  return lowest;
}

EigenPair symmetric_eigen_lowest_pair(const DenseMatrix& m) {
  if (m.size() == 0) throw InvalidInput("empty matrix");
  DenseMatrix v;
  const DenseMatrix a = diagonalize(m, &v);
  std::size_t k = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a(i, i) < a(k, k)) k = i;
  }
  EigenPair out{a(k, k), std::vector<double>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) out.vector[i] = v(i, k);
  return out;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
  const DenseMatrix a = diagonalize(m);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shortwell
