#include "shortwell/rational.hpp"

#include <cctype>
#include <algorithm>
#include <cmath>
#include <string>

#include "shortwell/error.hpp"

namespace shortwell {

BigRational::BigRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw InvalidInput("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    }
  }
  return mpz_class(std::string(digits), 10);
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw InvalidInput("malformed rational: ''");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigRational num = parse(text.substr(0, slash));
    BigRational den = parse(text.substr(slash + 1));
    if (den.is_zero()) throw InvalidInput("zero denominator");
    return num / den;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    const mpz_class e_val = parse_integer(exp_text, whole);
    if (!e_val.fits_slong_p() || e_val > 4096) throw InvalidInput("exponent out of range");
    exponent = exp_negative ? -e_val.get_si() : e_val.get_si();
    text = text.substr(0, e);
  }

  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(text);
  }

  mpz_class num = parse_integer(digits, whole);
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? BigRational(num * scale, 1) : BigRational(num, scale);
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite value has no rational form");
  return BigRational(mpq_class(value));
}

double BigRational::to_double() const {
  if (is_zero()) return 0.0;
  const mpz_class num = ::abs(value_.get_num());
  const mpz_class& den = value_.get_den();
  // floor(log2 |x|) is e0 or e0 - 1
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  {
    mpz_class a = num, b = den;
    if (e >= 0) b <<= static_cast<mp_bitcnt_t>(e);
    else a <<= static_cast<mp_bitcnt_t>(-e);
    if (a < b) --e;
  }
  // quantum 2^-s: 53 significant bits, or the subnormal spacing
  const long s = std::min(52 - e, 1074L) + 1;
  mpz_class a = num, b = den;
  if (s >= 0) a <<= static_cast<mp_bitcnt_t>(s);
  else b <<= static_cast<mp_bitcnt_t>(-s);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const bool half = mpz_odd_p(q.get_mpz_t()) != 0;
  q >>= 1;
  if (half && (r != 0 || mpz_odd_p(q.get_mpz_t()) != 0)) ++q;
  const double magnitude = std::ldexp(q.get_d(), static_cast<int>(-(s - 1)));
  return sgn(value_) < 0 ? -magnitude : magnitude;
}

std::string BigRational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::pow(int exponent) const {
  BigRational base = exponent < 0 ? BigRational(1) / *this : *this;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  BigRational result(1);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw InvalidInput("division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(f, 1);
}

}  // namespace shortwell
