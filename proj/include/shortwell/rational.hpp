#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shortwell {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class; every constructor canonicalizes,
/// and all arithmetic is exact.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  BigRational(const mpz_class& numerator, const mpz_class& denominator);
  explicit BigRational(mpq_class value);

  /// Accepts "p", "p/q", and finite decimals such as "-2.5" or "1e-3".
  static BigRational parse(std::string_view text);
  /// Exact binary value of a finite double.
  static BigRational from_double(double value);

  [[nodiscard]] std::string numerator_string() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator_string() const { return value_.get_den().get_str(); }
  [[nodiscard]] std::string to_string() const;
  // Correctly rounded (half to even); mpq_get_d truncates.
  [[nodiscard]] double to_double() const;
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] BigRational abs() const { return BigRational(mpq_class(::abs(value_))); }
  [[nodiscard]] BigRational pow(int exponent) const;

  BigRational& operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
  BigRational& operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
  BigRational& operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

/// n! as an exact rational.
BigRational factorial(unsigned n);

inline double to_double(const BigRational& r) { return r.to_double(); }
inline double to_double(double x) { return x; }

}  // namespace shortwell
