#include <gtest/gtest.h>

#include <random>

#include "shortwell/error.hpp"
#include "shortwell/implicit.hpp"
#include "shortwell/kernels.hpp"
#include "shortwell/models.hpp"
#include "shortwell/series.hpp"

namespace shortwell {
namespace {

BigRational q(long n, long d = 1) { return BigRational(mpz_class(n), mpz_class(d)); }

RationalSeries rs(std::vector<BigRational> c, std::string var = "lambda") { return RationalSeries(std::move(var), std::move(c)); }

RationalSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant = false) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  std::vector<BigRational> c(order + 1);
  for (auto& x : c) x = q(num(rng), den(rng));
  if (zero_constant) c[0] = 0;
  return rs(std::move(c));
}

TEST(TruncatedSeries, Arithmetic) {
  EXPECT_EQ(rs({1, 1, 0}) * rs({1, -1, 0}), rs({1, 0, -1}));
  EXPECT_EQ(RationalSeries::constant("lambda", 4, 1) / rs({1, -1, 0, 0, 0}), rs({1, 1, 1, 1, 1}));
  const auto a = rs({q(1, 3), 2, q(-5, 7)});
  EXPECT_TRUE((a + (RationalSeries("lambda", 2) - a)).is_zero());
}

TEST(TruncatedSeries, Errors) {
  EXPECT_THROW(rs({1, 2}) / rs({0, 1}), InvalidInput);
  EXPECT_THROW(rs({1, 2}) + rs({1, 2, 3}), InvalidInput);
  EXPECT_THROW(rs({1, 2}) + rs({1, 2}, "z"), InvalidInput);
}

TEST(TruncatedSeries, RingAxioms) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a[0].is_zero()) EXPECT_EQ(a * (RationalSeries::constant("lambda", 8, 1) / a), RationalSeries::constant("lambda", 8, 1));
  }
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(rs({1, 1, 0}, "z"), rs({0, 0, 1})), rs({1, 0, 1}));
  EXPECT_EQ(compose(kernel_series(Kernel::exp, 3), rs({0, 1, 1, 0})), rs({1, 1, q(3, 2), q(7, 6)}));
  EXPECT_EQ(compose(rs({5, 2, 3}, "z"), RationalSeries("lambda", 2)), rs({5, 0, 0}));
  EXPECT_THROW(compose(rs({1, 1}, "z"), rs({1, 1})), InvalidInput);
}

TEST(Sqrt1p, Examples) {
  EXPECT_EQ(sqrt1p(rs({0, 4, 0, 0, 0})), rs({1, 2, -2, 4, -10}));
  EXPECT_EQ(sqrt1p(RationalSeries("lambda", 3)), RationalSeries::constant("lambda", 3, 1));
  EXPECT_THROW(sqrt1p(rs({1, 1})), InvalidInput);
}

TEST(Sqrt1p, SquareProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_series(rng, 10, true);
    const auto s = sqrt1p(a);
    EXPECT_EQ(s * s, a + BigRational(1));
  }
}

TEST(Kernels, Examples) {
  EXPECT_EQ(kernel_series(Kernel::cos_sqrt, 2), rs({1, q(-1, 2), q(1, 24)}, "z"));
  EXPECT_EQ(kernel_series(Kernel::sqrtcoth, 2), rs({1, q(1, 3), q(-1, 45)}, "z"));
  EXPECT_EQ(kernel_series(Kernel::tan_sq_sqrt, 3), rs({0, 1, q(2, 3), q(17, 45)}, "z"));
  EXPECT_THROW(kernel_series(Kernel::exp, kMaxSeriesOrder + 1), InvalidInput);
}

TEST(Kernels, Identities) {
  const std::size_t n = 40;
  const auto z = RationalSeries::identity("z", n);
  const auto one = RationalSeries::constant("z", n, 1);
  const auto c = kernel_series(Kernel::cos_sqrt, n), s = kernel_series(Kernel::sinc_sqrt, n);
  const auto ch = kernel_series(Kernel::cosh_sqrt, n), sh = kernel_series(Kernel::sinhc_sqrt, n);
  EXPECT_EQ(c * c + z * s * s, one);
  EXPECT_EQ(ch * ch - z * sh * sh, one);
  EXPECT_EQ(kernel_series(Kernel::tan_sq_sqrt, n) * c * c, z * s * s);
  EXPECT_EQ(kernel_series(Kernel::sqrtcoth, n) * sh, ch);
}

TEST(Kernels, PointwiseContinuation) {
  EXPECT_NEAR(tan_sq_sqrt(-4.0), -std::pow(std::tanh(2.0), 2), 1e-15);
  EXPECT_NEAR(tan_sq_sqrt(0.25), std::pow(std::tan(0.5), 2), 1e-15);
  EXPECT_NEAR(cos_sqrt(-9.0), std::cosh(3.0), 1e-12);
  EXPECT_NEAR(sqrtcoth(4.0), 2.0 / std::tanh(2.0), 1e-14);
  EXPECT_DOUBLE_EQ(sinc_sqrt(0.0), 1.0);
}

TEST(NewtonImplicit, WellSeries) {
  EXPECT_EQ(ground_state_series(ModelId::square, 6),
            rs({0, 0, -1, q(4, 3), q(-92, 45), q(1072, 315), q(-84752, 14175)}));
  EXPECT_EQ(ground_state_series(ModelId::exponential, 6),
            rs({0, 0, -1, 3, q(-143, 12), q(3887, 72), q(-71303, 270)}));
  EXPECT_EQ(ground_state_series(ModelId::poschl_teller, 5), rs({0, 0, -1, 2, -5, 14}));
  EXPECT_EQ(ground_state_series(ModelId::delta, 4), rs({0, 0, q(-1, 4), 0, 0}));
}

TEST(NewtonImplicit, DeltaSymbolicL) {
  for (long l : {5L, 10L, 20L}) {
    const BigRational big_l(l);
    EXPECT_EQ(delta_periodic_series(big_l, 5),
              rs({0, q(-1) / big_l, q(-1, 12), -big_l / q(180), -big_l * big_l / q(3780),
                  -big_l * big_l * big_l / q(226800)}));
  }
  EXPECT_EQ(delta_rescaled_constants(5), (std::vector<BigRational>{0, -1, q(-1, 12), q(-1, 180), q(-1, 3780), q(-1, 226800)}));
}

TEST(NewtonImplicit, SubstitutionVanishes) {
  for (auto id : {ModelId::square, ModelId::delta, ModelId::exponential, ModelId::poschl_teller}) {
    const auto rel = series_relation(id);
    for (std::size_t n : {6u, 15u}) {
      const auto y = newton_implicit_series(rel, n);
      EXPECT_TRUE(rel.value(y).is_zero()) << to_string(id);
    }
  }
}

TEST(NewtonImplicit, Errors) {
  SeriesRelation<BigRational> flat;
  flat.value = [](const RationalSeries& y) { return y * y; };
  flat.derivative = [](const RationalSeries& y) { return y * BigRational(2); };
  EXPECT_THROW(newton_implicit_series(flat, 4), NumericalError);
}

BigRational catalan(unsigned k) { return factorial(2 * k) / (factorial(k) * factorial(k + 1)); }

TEST(PoschlTeller, CatalanClosedForm) {
  const std::size_t n = 30;
  const auto four_lambda = RationalSeries::identity("lambda", n) * BigRational(4);
  const auto closed = (sqrt1p(four_lambda) - BigRational(1) - four_lambda / BigRational(2)) / BigRational(2);
  // (1/2)(sqrt(1+4 lambda) - 1 - 2 lambda) = sum_j (-1)^(j-1) Catalan(j-1) lambda^j, j >= 2
  for (std::size_t j = 2; j <= n; ++j) {
    const BigRational expected = (j % 2 ? BigRational(1) : BigRational(-1)) * catalan(static_cast<unsigned>(j - 1));
    EXPECT_EQ(closed[j], expected) << j;
  }
  EXPECT_EQ(ground_state_series(ModelId::poschl_teller, n), closed);
}

TEST(FloatSeries, ToFloatMatches) {
  const auto f = ground_state_series(ModelId::square, 6).to_float();
  EXPECT_DOUBLE_EQ(f[4], -92.0 / 45.0);
  EXPECT_NEAR(f.evaluate(0.1), -0.01 + 4.0 / 3e3 - 92.0 / 45e4 + 1072.0 / 315e5 - 84752.0 / 14175e6, 1e-17);
}

}  // namespace
}  // namespace shortwell
