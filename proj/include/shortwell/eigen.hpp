#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace shortwell {

/// Row-major dense square matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  [[nodiscard]] double frobenius_norm() const;
  /// True when |a_ij - a_ji| <= rel_tol * ||A||_F for every pair.
  [[nodiscard]] bool is_symmetric(double rel_tol = 1e-12) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Smallest eigenvalue of a real symmetric matrix by cyclic Jacobi
/// rotations, iterated until the off-diagonal Frobenius norm drops below
/// 1e-13 ||M||_F. Throws InvalidInput("not symmetric").
double symmetric_eigen_lowest(const DenseMatrix& m);

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm
};

/// Lowest eigenvalue together with its eigenvector (rotations accumulated).
EigenPair symmetric_eigen_lowest_pair(const DenseMatrix& m);

/// All eigenvalues in ascending order (same algorithm).
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

}  // namespace shortwell
