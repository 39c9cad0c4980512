#include <gtest/gtest.h>

#include <cmath>

#include "shortwell/error.hpp"
#include "shortwell/models.hpp"
#include "shortwell/summation.hpp"

namespace shortwell {
namespace {

BigRational q(long n, long d = 1) { return BigRational(mpz_class(n), mpz_class(d)); }

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
  return sxy / sxx;
}

RationalSeries poly_series(const std::vector<BigRational>& c, std::size_t order) {
  std::vector<BigRational> out(order + 1);
  for (std::size_t k = 0; k < c.size() && k <= order; ++k) out[k] = c[k];
  return RationalSeries("lambda", out);
}

double exact(ModelId id, double lambda) {
  ModelSpec m;
  m.id = id;
  m.lambda = lambda;
  return exact_eigenvalue(m);
}

TEST(Pade, Geometric) {
  const auto p = pade(RationalSeries("lambda", std::vector<BigRational>{1, 1, 1, 1}), 0, 1);
  EXPECT_EQ(*p.exact_numerator, (std::vector<BigRational>{1}));
  EXPECT_EQ(*p.exact_denominator, (std::vector<BigRational>{1, -1}));
  EXPECT_DOUBLE_EQ(p.evaluate(0.5), 2.0);
  EXPECT_FALSE(p.reduced());
}

TEST(Pade, ReExpansionExact) {
  for (auto id : {ModelId::square, ModelId::exponential, ModelId::poschl_teller}) {
    const auto s = ground_state_series(id, 8);
    for (auto [l, m] : {std::pair{3, 3}, {4, 2}, {5, 3}, {4, 4}}) {
      const auto p = pade(s, l, m);
      const auto n = poly_series(*p.exact_numerator, s.order());
      const auto d = poly_series(*p.exact_denominator, s.order());
      const auto back = n / d;
      for (int k = 0; k <= l + m; ++k) EXPECT_EQ(back[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(Pade, FloatReExpansion) {
  const auto s = ground_state_series(ModelId::exponential, 6).to_float();
  const auto p = pade(s, 3, 3);
  std::vector<double> n(7, 0.0), d(7, 0.0);
  for (std::size_t k = 0; k < p.numerator.size(); ++k) n[k] = p.numerator[k];
  for (std::size_t k = 0; k < p.denominator.size(); ++k) d[k] = p.denominator[k];
  const auto back = FloatSeries("lambda", n) / FloatSeries("lambda", d);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_NEAR(back[k], s[k], 1e-10);
}

TEST(Pade, ExponentialAgainstExactRoot) {
  // Values and distances from the exact roots fixed by tests/oracles/oracle_values.py.
  const auto p = pade(ground_state_series(ModelId::exponential, 6), 3, 3);
  const double at[] = {0.25, 0.5, 0.75};
  const double value[] = {-0.038089178682367123, -0.11576839653979079, -0.21708954707466431};
  const double tolerance[] = {1e-4, 2e-3, 1e-2};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(p.evaluate(at[i]), value[i], 1e-15);
    EXPECT_LT(std::abs(p.evaluate(at[i]) - exact(ModelId::exponential, at[i])), tolerance[i]);
  }
}

TEST(Pade, PoschlTeller) {
  const auto p = pade(ground_state_series(ModelId::poschl_teller, 4), 2, 2);
  EXPECT_NEAR(p.evaluate(0.2), exact(ModelId::poschl_teller, 0.2), 1e-3);
  EXPECT_NEAR(p.evaluate(0.2), -1.0 / 34, 1e-15);
}

TEST(Pade, DegenerateReduction) {
  // The [1/2] system for 1/(1 - lambda) is singular; M drops to 1.
  const auto p = pade(RationalSeries("lambda", std::vector<BigRational>(4, BigRational(1))), 1, 2);
  EXPECT_TRUE(p.reduced());
  EXPECT_EQ(p.denominator_degree, 1);
  EXPECT_EQ(p.requested_denominator_degree, 2);
  EXPECT_DOUBLE_EQ(p.evaluate(0.75), 4.0);
  try {
    pade(RationalSeries("lambda", std::vector<BigRational>{1, 0, 1}), 1, 1);
    FAIL() << "expected a degenerate entry";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate"), std::string::npos);
  }
  EXPECT_THROW(pade(ground_state_series(ModelId::square, 4), 3, 3), InvalidInput);
}

TEST(QuadraticPade, PoschlTellerExact) {
  const auto qp = quadratic_pade(ground_state_series(ModelId::poschl_teller, 6), 2, 1, 0);
  EXPECT_EQ(*qp.exact_p, (std::vector<BigRational>{0, 0, 1}));
  EXPECT_EQ(*qp.exact_q, (std::vector<BigRational>{1, 2}));
  EXPECT_EQ(*qp.exact_r, (std::vector<BigRational>{1}));
  for (double lam : {0.1, 1.0, 10.0, 100.0}) EXPECT_NEAR(qp.evaluate(lam), exact(ModelId::poschl_teller, lam), 1e-12 * lam);
}

TEST(QuadraticPade, PolynomialInput) {
  const auto qp = quadratic_pade(poly_series({1, 2, 3}, 3), 2, 0, 0);
  const auto& p = *qp.exact_p;
  const auto& qq = *qp.exact_q;
  ASSERT_EQ(qq.size(), 1u);
  EXPECT_EQ(*qp.exact_r, (std::vector<BigRational>{0}));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(-p[k] / qq[0], (std::vector<BigRational>{1, 2, 3})[k]);
}

TEST(QuadraticPade, SquareWellBeatsPade) {
  const auto s = ground_state_series(ModelId::square, 6);
  const auto qp = quadratic_pade(s, 2, 2, 1);
  const double root = exact(ModelId::square, 1.0);
  EXPECT_NEAR(qp.evaluate(1.0), -0.45368328400950791, 1e-14);
  EXPECT_LT(std::abs(qp.evaluate(1.0) - root), std::abs(pade(s, 3, 3).evaluate(1.0) - root));
}

TEST(QuadraticPade, ResidualVanishes) {
  for (auto id : {ModelId::square, ModelId::exponential}) {
    const auto s = ground_state_series(id, 8);
    for (auto d : {std::array{2, 2, 1}, std::array{2, 1, 1}, std::array{3, 2, 2}}) {
      const auto qp = quadratic_pade(s, d[0], d[1], d[2]);
      const auto residual =
          poly_series(*qp.exact_p, 8) + poly_series(*qp.exact_q, 8) * s + poly_series(*qp.exact_r, 8) * s * s;
      for (int k = 0; k <= d[0] + d[1] + d[2] + 1; ++k) EXPECT_TRUE(residual[static_cast<std::size_t>(k)].is_zero());
    }
  }
}

TEST(QuadraticPade, BranchSelectionOrder) {
  const std::pair<ModelId, std::array<int, 3>> cases[] = {{ModelId::square, {2, 2, 1}}, {ModelId::exponential, {2, 1, 0}}};
  for (const auto& [id, d] : cases) {
    const int n = d[0] + d[1] + d[2] + 1;
    const auto s = ground_state_series(id, static_cast<std::size_t>(n));
    const auto qp = quadratic_pade(s, d[0], d[1], d[2]);
    const auto f = s.to_float();
    std::vector<double> lx, ly;
    for (double lam : {1e-3, 2e-3, 4e-3, 1e-2}) {
      lx.push_back(std::log(lam));
      ly.push_back(std::log(std::abs(qp.evaluate(lam) - f.evaluate(lam))));
    }
    EXPECT_GE(fit_slope(lx, ly), n + 1 - 0.5) << to_string(id);
  }
}

TEST(QuadraticPade, Errors) {
  const auto qp = quadratic_pade(ground_state_series(ModelId::poschl_teller, 6), 2, 1, 0);
  try {
    (void)qp.evaluate(-1.0);  // discriminant 1 + 4 lambda < 0
    FAIL() << "expected a complex branch";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("complex branch"), std::string::npos);
  }
  EXPECT_THROW(quadratic_pade(ground_state_series(ModelId::square, 3), 2, 2, 1), InvalidInput);
}

TEST(TwoPointPade, PoschlTeller) {
  const auto s = ground_state_series(ModelId::poschl_teller, 8);
  const auto t = two_point_pade(s, {BigRational(-1), BigRational(1)}, 3, 2);
  EXPECT_EQ(*t.exact_numerator, (std::vector<BigRational>{0, 0, 0, -1}));
  EXPECT_EQ(*t.exact_denominator, (std::vector<BigRational>{1, 1}));
  EXPECT_EQ(t.leading_coefficient(), -1.0);
  const double lam = 10.0, root = exact(ModelId::poschl_teller, lam);
  const double series_error = std::abs(s.to_float().evaluate(lam) - root);
  EXPECT_LT(std::abs(t.evaluate(lam) - root), series_error);
  EXPECT_NEAR(t.evaluate(lam), -7.5974692664795791, 1e-12);
  const auto t52 = two_point_pade(s, {BigRational(-1), BigRational(1)}, 5, 2);
  EXPECT_LT(std::abs(t52.evaluate(lam) - root), std::abs(t.evaluate(lam) - root));
}

TEST(TwoPointPade, ReproducesTargetForm) {
  // -lambda^2/(1 + lambda) = -u^4/(1 + u^2)
  std::vector<BigRational> c(9);
  for (std::size_t k = 2; k <= 8; ++k) c[k] = (k % 2 ? BigRational(1) : BigRational(-1));
  const auto t = two_point_pade(RationalSeries("lambda", c), {BigRational(-1)}, 6, 1);
  EXPECT_EQ(*t.exact_numerator, (std::vector<BigRational>{0, 0, 0, 0, -1}));
  EXPECT_EQ(*t.exact_denominator, (std::vector<BigRational>{1, 0, 1}));
}

TEST(TwoPointPade, SquareWell) {
  const auto s = ground_state_series(ModelId::square, 10);
  EXPECT_THROW(two_point_pade(s, {BigRational(-1)}, 4, 1), NumericalError);
  const double root = exact(ModelId::square, 10.0);
  const auto t6 = two_point_pade(s, {BigRational(-1)}, 6, 1);
  const auto t10 = two_point_pade(s, {BigRational(-1)}, 10, 1);
  EXPECT_EQ(t6.leading_coefficient(), -1.0);
  EXPECT_EQ(t10.leading_coefficient(), -1.0);
  // Measured distances from the root at lambda = 10: 0.498 and 0.202.
  EXPECT_NEAR(t6.evaluate(10.0) - root, -0.4981238, 1e-6);
  EXPECT_NEAR(t10.evaluate(10.0) - root, -0.2020, 1e-3);
  EXPECT_LT(std::abs(t10.evaluate(1.0) - exact(ModelId::square, 1.0)), 4e-3);
}

TEST(Radius, ClosedFormWells) {
  const auto pt = radius_estimate(ground_state_series(ModelId::poschl_teller, 31));
  EXPECT_NEAR(pt.radius, 0.25, 1e-4);
  EXPECT_EQ(pt.singularity_sign, -1);
  const auto sq = radius_estimate(ground_state_series(ModelId::square, 31));
  EXPECT_NEAR(sq.radius, 0.43923, 1e-3);
  EXPECT_EQ(sq.singularity_sign, -1);
  EXPECT_NEAR(radius_estimate(RationalSeries("lambda", std::vector<BigRational>(31, BigRational(1)))).radius, 1.0, 1e-12);
}

TEST(Radius, SquareWellConvergesToBranchPoint) {
  const double target = std::abs(branch_point(ModelId::square).lambda);
  double previous = 1.0;
  for (std::size_t n = 12; n <= 31; ++n) {
    const double err = std::abs(radius_estimate(ground_state_series(ModelId::square, n)).radius - target);
    EXPECT_LT(err, previous) << n;
    previous = err;
  }
}

TEST(Radius, Errors) {
  EXPECT_THROW(radius_estimate(ground_state_series(ModelId::square, 8)), NumericalError);
  EXPECT_THROW(radius_estimate(ground_state_series(ModelId::delta, 30)), NumericalError);
}

}  // namespace
}  // namespace shortwell
