#include <gtest/gtest.h>

#include <algorithm>

#include <limits>

#include <cmath>
#include <numbers>
#include <random>

#include "shortwell/eigen.hpp"
#include "shortwell/error.hpp"
#include "shortwell/models.hpp"
#include "shortwell/quadrature.hpp"
#include "shortwell/rational.hpp"
#include "shortwell/roots.hpp"

namespace shortwell {
namespace {

TEST(BigRational, CanonicalForm) {
  const BigRational q(mpz_class(-6), mpz_class(-4));
  EXPECT_EQ(q.numerator_string(), "3");
  EXPECT_EQ(q.denominator_string(), "2");
  EXPECT_EQ(BigRational::parse("6/-4"), BigRational(mpz_class(-3), mpz_class(2)));
  EXPECT_EQ(BigRational::parse("-2.5"), BigRational(mpz_class(-5), mpz_class(2)));
  EXPECT_EQ(BigRational::parse("1e-3"), BigRational(mpz_class(1), mpz_class(1000)));
  EXPECT_THROW(BigRational::parse("1/0"), InvalidInput);
  EXPECT_THROW(BigRational::parse("abc"), InvalidInput);
}

TEST(BigRational, AddSubtractRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const BigRational ab(mpz_class(num(rng)), mpz_class(den(rng)));
    const BigRational cd(mpz_class(num(rng)), mpz_class(den(rng)));
    EXPECT_EQ((ab + cd) - cd, ab);
    if (!cd.is_zero()) EXPECT_EQ((ab * cd) / cd, ab);
  }
}

TEST(BigRational, DivisionByZeroThrows) { EXPECT_THROW(BigRational(1) / BigRational(0), InvalidInput); }

TEST(BigRational, FromDoubleIsExact) {
  EXPECT_EQ(BigRational::from_double(0.375), BigRational(mpz_class(3), mpz_class(8)));
  EXPECT_EQ(BigRational::from_double(0.1).to_double(), 0.1);
}

TEST(BigRational, ToDoubleRoundsToNearest) {
  // IEEE division of exactly representable integers is correctly rounded
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-(1L << 52), 1L << 52);
  for (int i = 0; i < 2000; ++i) {
    const long n = dist(rng), d = std::max(1L, std::labs(dist(rng)));
    EXPECT_EQ(BigRational(mpz_class(n), mpz_class(d)).to_double(), static_cast<double>(n) / static_cast<double>(d));
  }
  EXPECT_EQ(BigRational(mpz_class(-71303), mpz_class(270)).to_double(), -71303.0 / 270);
  // ties go to even: 2^53 + 1 and 2^53 + 3
  const mpz_class two53 = mpz_class(1) << 53;
  EXPECT_EQ(BigRational(two53 + 1, 1).to_double(), 9007199254740992.0);
  EXPECT_EQ(BigRational(two53 + 3, 1).to_double(), 9007199254740996.0);
  const mpz_class two1074 = mpz_class(1) << 1074;
  EXPECT_EQ(BigRational(3, two1074 * 2).to_double(), 2 * std::numeric_limits<double>::denorm_min());
  EXPECT_EQ(BigRational(1, two1074 * 4).to_double(), 0.0);
  EXPECT_EQ(BigRational(mpz_class(1) << 1100, 1).to_double(), std::ldexp(1.0, 1100));
}

TEST(SolveBracketed, SquareRootOfTwo) {
  const auto r = solve_bracketed([](double x) { return x * x - 2.0; }, {1.0, 2.0}, 1e-12);
  EXPECT_NEAR(r.root, std::numbers::sqrt2, 1e-12);
  EXPECT_LE(r.final_bracket.hi - r.final_bracket.lo, 1e-12);
  const double flo = r.final_bracket.lo * r.final_bracket.lo - 2.0;
  const double fhi = r.final_bracket.hi * r.final_bracket.hi - 2.0;
  EXPECT_LE(flo * fhi, 0.0);
}

TEST(SolveBracketed, SquareWellResidual) {
  // Ground state at lambda = 1 from an independent 40-digit bisection.
  ModelSpec m;
  m.id = ModelId::square;
  m.lambda = 1.0;
  const auto r = solve_bracketed([&](double k1) { return residual(m, k1 * k1 - 1.0); },
                                 {1e-9, 1.0 - 1e-9}, 1e-13);  // k1 in (0, min(sqrt(lambda), pi/2))
  EXPECT_NEAR(r.root * r.root - 1.0, -0.45375316586032825, 1e-12);
}

TEST(SolveBracketed, DeltaPeriodic) {
  ModelSpec m;
  m.id = ModelId::delta;
  m.lambda = 2.0;
  m.box_length = 20.0;
  EXPECT_NEAR(exact_eigenvalue(m), -1.0, 1e-8);
}

TEST(SolveBracketed, Errors) {
  EXPECT_THROW(solve_bracketed([](double x) { return x * x + 1.0; }, {0.0, 1.0}), InvalidInput);
  EXPECT_THROW(solve_bracketed([](double x) { return x < 0.5 ? -1.0 : std::nan(""); }, {0.0, 1.0}), NumericalError);
}

TEST(SolveBracketed, BracketsStraddleForModelResiduals) {
  for (auto id : {ModelId::square, ModelId::exponential}) {
    for (double lam : {0.5, 1.0, 2.0, 5.0}) {
      ModelSpec m;
      m.id = id;
      m.lambda = lam;
      const auto form = quantization_form(m);
      auto f = [&](double u) { return form.analytic_residual(u, lam); };
      const auto r = solve_bracketed(f, form.ground_bracket, 1e-12);
      EXPECT_LE(r.final_bracket.hi - r.final_bracket.lo, 1e-12);
      EXPECT_LE(f(r.final_bracket.lo) * f(r.final_bracket.hi), 0.0);
    }
  }
}

TEST(Newton2d, Linear) {
  const auto p = newton_2d([](Point2 x) { return Point2{x[0] - 1.0, x[1] + 2.0}; }, {0.0, 0.0});
  EXPECT_NEAR(p[0], 1.0, 1e-10);
  EXPECT_NEAR(p[1], -2.0, 1e-10);
}

TEST(Newton2d, CircleLine) {
  const auto p = newton_2d([](Point2 x) { return Point2{x[0] * x[0] + x[1] * x[1] - 1.0, x[0] - x[1]}; }, {1.0, 0.0});
  EXPECT_NEAR(p[0], std::numbers::sqrt2 / 2, 1e-10);
  EXPECT_NEAR(p[1], std::numbers::sqrt2 / 2, 1e-10);
}

TEST(Newton2d, SquareWellBranchPair) {
  ModelSpec m;
  m.id = ModelId::square;
  auto f = [&](double e, double l) { return recast_residual(m, e, l); };
  const auto p = newton_2d(
      [&](Point2 x) {
        const double h = 1e-4;
        return Point2{f(x[0], x[1]), (f(x[0] + h, x[1]) - f(x[0] - h, x[1])) / (2 * h)};
      },
      {-0.9, -0.4});
  EXPECT_NEAR(p[0], -1.0, 1e-6);
  EXPECT_NEAR(p[1], -0.4392288398906452, 1e-8);
}

TEST(Newton2d, SingularSystem) {
  EXPECT_THROW(newton_2d([](Point2 x) { return Point2{x[0] + x[1] - 1.0, 2 * x[0] + 2 * x[1] - 3.0}; }, {0.0, 0.0}),
               NumericalError);
}

TEST(SymmetricEigen, Trivial) {
  DenseMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1.0;
  EXPECT_DOUBLE_EQ(symmetric_eigen_lowest(id), 1.0);
  DenseMatrix swap(2);
  swap(0, 1) = swap(1, 0) = 1.0;
  EXPECT_NEAR(symmetric_eigen_lowest(swap), -1.0, 1e-15);
  DenseMatrix bad(2);
  bad(0, 1) = 1.0;
  EXPECT_THROW(symmetric_eigen_lowest(bad), InvalidInput);
}

TEST(SymmetricEigen, RotatedDiagonal) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (std::size_t n : {4u, 9u, 20u}) {
    // Random orthogonal Q from Gram-Schmidt on a Gaussian matrix.
    std::vector<std::vector<double>> q(n, std::vector<double>(n));
    for (auto& row : q)
      for (auto& x : row) x = g(rng);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        double dot = 0;
        for (std::size_t t = 0; t < n; ++t) dot += q[i][t] * q[k][t];
        for (std::size_t t = 0; t < n; ++t) q[i][t] -= dot * q[k][t];
      }
      double norm = 0;
      for (double x : q[i]) norm += x * x;
      for (double& x : q[i]) x /= std::sqrt(norm);
    }
    std::vector<double> v(n);
    for (auto& x : v) x = 10 * g(rng);
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(i, j) += q[k][i] * v[k] * q[k][j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
    EXPECT_NEAR(symmetric_eigen_lowest(m), *std::min_element(v.begin(), v.end()), 1e-10);

    const auto pair = symmetric_eigen_lowest_pair(m);
    for (std::size_t i = 0; i < n; ++i) {
      double mv = 0;
      for (std::size_t j = 0; j < n; ++j) mv += m(i, j) * pair.vector[j];
      EXPECT_NEAR(mv, pair.value * pair.vector[i], 1e-9);
    }
  }
}

TEST(GaussLegendre, SmallRules) {
  const auto r1 = gauss_legendre(1);
  EXPECT_EQ(r1.nodes.size(), 1u);
  EXPECT_NEAR(r1.nodes[0], 0.0, 1e-16);
  EXPECT_NEAR(r1.weights[0], 2.0, 1e-15);
  const auto r2 = gauss_legendre(2);
  EXPECT_NEAR(r2.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r2.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(integrate(gauss_legendre(4), -1.0, 1.0, [](double x) { return std::pow(x, 6); }), 2.0 / 7.0, 1e-14);
  EXPECT_THROW(gauss_legendre(0), InvalidInput);
  EXPECT_THROW(gauss_legendre(257), InvalidInput);
}

TEST(GaussLegendre, ExactnessDegree) {
  for (int n : {2, 4, 8, 16, 64, 256}) {
    const auto rule = gauss_legendre(n);
    double wsum = 0;
    for (double w : rule.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-14) << n;
    for (int k = 0; k <= 2 * n - 1 && k <= 40; ++k) {
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      const double got = integrate(rule, -1.0, 1.0, [k](double x) { return std::pow(x, k); });
      EXPECT_NEAR(got, exact, 1e-13 * std::max(1.0, exact)) << "n=" << n << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace shortwell
