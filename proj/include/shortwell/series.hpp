#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "shortwell/error.hpp"
#include "shortwell/rational.hpp"

namespace shortwell {

/// Power series c_0 + c_1 x + ... + c_N x^N known through order N.
///
/// T is BigRational (exact domain) or double (float domain). Binary
/// operations require the same variable name and order; products are
/// truncated at N and nothing beyond order N is ever read or produced.
template <class T>
class TruncatedSeries {
 public:
  using value_type = T;

  TruncatedSeries() : TruncatedSeries("lambda", 0) {}

  TruncatedSeries(std::string variable, std::size_t order)
      : variable_(std::move(variable)), coeffs_(order + 1, T(0)) {}

  TruncatedSeries(std::string variable, std::vector<T> coeffs)
      : variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("series needs at least one coefficient");
  }

  static TruncatedSeries constant(std::string variable, std::size_t order, T value) {
    TruncatedSeries s(std::move(variable), order);
    s.coeffs_[0] = std::move(value);
    return s;
  }

  /// The series of the variable itself, x.
  static TruncatedSeries identity(std::string variable, std::size_t order) {
    TruncatedSeries s(std::move(variable), order);
    if (order >= 1) s.coeffs_[1] = T(1);
    return s;
  }

  [[nodiscard]] const std::string& variable() const { return variable_; }
  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const T& operator[](std::size_t k) const { return coeffs_[k]; }
  [[nodiscard]] std::span<const T> coefficients() const { return coeffs_; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return c == T(0); });
  }

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  [[nodiscard]] std::size_t valuation() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == T(0)) ++k;
    return k;
  }

  [[nodiscard]] TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw InvalidInput("cannot extend a truncated series");
    return TruncatedSeries(variable_, std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  [[nodiscard]] TruncatedSeries renamed(std::string variable) const {
    return TruncatedSeries(std::move(variable), coeffs_);
  }

  /// d/dx, known through order N-1 (an order-0 series differentiates to 0).
  [[nodiscard]] TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(variable_, 0);
    std::vector<T> d(order());
    for (std::size_t k = 1; k <= order(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
    return TruncatedSeries(variable_, std::move(d));
  }

  /// Horner evaluation of the truncated polynomial.
  template <class X>
  [[nodiscard]] X evaluate(const X& x) const {
    auto as_x = [](const T& c) -> X {
      if constexpr (std::is_same_v<X, double>) {
        return to_double(c);
      } else {
        return X(c);
      }
    };
    X acc = as_x(coeffs_.back());
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + as_x(coeffs_[k]);
    return acc;
  }

  [[nodiscard]] TruncatedSeries<double> to_float() const {
    std::vector<double> c(coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = to_double(coeffs_[k]);
    return TruncatedSeries<double>(variable_, std::move(c));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const T& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }
  TruncatedSeries& operator/=(const T& scalar) {
    if (scalar == T(0)) throw InvalidInput("division by zero");
    for (auto& c : coeffs_) c /= scalar;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }
  friend TruncatedSeries operator*(const T& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator/(TruncatedSeries a, const T& s) { return a /= s; }
  friend TruncatedSeries operator+(TruncatedSeries a, const T& s) {
    a.coeffs_[0] += s;
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const T& s) {
    a.coeffs_[0] -= s;
    return a;
  }
  friend TruncatedSeries operator+(const T& s, TruncatedSeries a) { return std::move(a) + s; }
  friend TruncatedSeries operator-(const T& s, TruncatedSeries a) { return (-std::move(a)) + s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    const std::size_t n = a.order();
    TruncatedSeries out(a.variable_, n);
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    for (std::size_t i = va; i <= n; ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = vb; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  /// Power-series long division; requires b_0 != 0.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    if (b.coeffs_[0] == T(0)) throw InvalidInput("non-unit divisor");
    const std::size_t n = a.order();
    TruncatedSeries q(a.variable_, n);
    for (std::size_t k = 0; k <= n; ++k) {
      T acc = a.coeffs_[k];
      for (std::size_t j = 1; j <= k; ++j) {
        if (b.coeffs_[j] != T(0)) acc -= b.coeffs_[j] * q.coeffs_[k - j];
      }
      q.coeffs_[k] = acc / b.coeffs_[0];
    }
    return q;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_compatible(const TruncatedSeries& other) const {
    if (variable_ != other.variable_ || coeffs_.size() != other.coeffs_.size()) {
      throw InvalidInput("incompatible series");
    }
  }

  std::string variable_;
  std::vector<T> coeffs_;
};

using RationalSeries = TruncatedSeries<BigRational>;
using FloatSeries = TruncatedSeries<double>;

/// outer(inner(x)) by Horner's scheme. inner must have a zero constant term
/// and outer must be known at least through inner's order.
template <class T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
  if (inner[0] != T(0)) throw InvalidInput("composition requires nilpotent argument");
  const std::size_t n = inner.order();
  if (outer.order() < n) throw InvalidInput("incompatible series");
  // Terms beyond order n of outer cannot contribute because inner = O(x).
  TruncatedSeries<T> acc = TruncatedSeries<T>::constant(inner.variable(), n, outer[n]);
  for (std::size_t k = n; k-- > 0;) acc = acc * inner + outer[k];
  return acc;
}

/// sqrt(1 + a) for a with zero constant term, by Newton iteration
/// s <- (s + (1 + a)/s)/2 in the truncated ring starting from s = 1.
template <class T>
TruncatedSeries<T> sqrt1p(const TruncatedSeries<T>& a) {
  if (a[0] != T(0)) throw InvalidInput("unsupported branch point");
  const TruncatedSeries<T> target = a + T(1);
  auto s = TruncatedSeries<T>::constant(a.variable(), a.order(), T(1));
  // Each step doubles the number of correct coefficients.
  int steps = 2;
  for (std::size_t covered = 1; covered <= a.order(); covered *= 2) ++steps;
  for (int i = 0; i < steps; ++i) {
    auto next = (s + target / s) / T(2);
    if (next == s) break;
    s = std::move(next);
  }
  return s;
}

}  // namespace shortwell
