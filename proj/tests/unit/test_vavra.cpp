#include "test_util.hpp"

#include "norts/distributions.hpp"
#include "norts/vavra.hpp"

#include <gtest/gtest.h>

namespace norts {
namespace {

// From tests/oracles/frozen_values.py (mpmath).
constexpr double kAdFixture20 = 0.38836168511314247;
constexpr double kAdNormalQuantiles100 = 0.01260333091087334;

// n * integral over u of (F_n - u)^2 / (u (1 - u)), composite Simpson on each
// interval between consecutive standardized order statistics mapped through Phi.
double ad_by_quadrature(const Series& s) {
  const Eigen::Index n = s.size();
  const double m = sample_mean(s), sd = std::sqrt(sample_autocov(s, 0));
  std::vector<double> u{0.0};
  for (Eigen::Index i = 0; i < n; ++i) u.push_back(normal_cdf((s[i] - m) / sd));
  std::sort(u.begin() + 1, u.end());
  u.push_back(1.0);
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) {
    const double c = static_cast<double>(j) / static_cast<double>(n);
    const auto f = [c](double v) {
      if (v <= 0.0) return c == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      if (v >= 1.0) return c == 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
      return (c - v) * (c - v) / (v * (1.0 - v));
    };
    const int m_steps = 2000;
    const double a = u[j], b = u[j + 1], h = (b - a) / m_steps;
    if (h == 0.0) continue;
    double acc = f(a) + f(b);
    for (int k = 1; k < m_steps; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    total += acc * h / 3.0;
  }
  return static_cast<double>(n) * total;
}

TEST(AndersonDarling, FrozenValues) {
  EXPECT_NEAR(anderson_darling(test::as_series(test::kFixture20)), kAdFixture20, 1e-10);
  Vector q(100);
  for (int i = 0; i < 100; ++i) q[i] = normal_quantile((i + 0.5) / 100.0);
  EXPECT_NEAR(anderson_darling(Series(q)), kAdNormalQuantiles100, 1e-10);
}

TEST(AndersonDarling, AgreesWithQuadrature) {
  for (const auto& s : test::all_fixtures()) EXPECT_NEAR(anderson_darling(s), ad_by_quadrature(s), 1e-6) << s.size();
}

TEST(AndersonDarling, LocationScaleInvariant) {
  const Series s = test::as_series(test::kFixture25);
  EXPECT_NEAR(anderson_darling(test::affine(s, 40.0, -3.0)), anderson_darling(s), 1e-10);
}

TEST(AndersonDarling, RejectsDegenerateInput) {
  EXPECT_THROW(anderson_darling(Series(Vector::Constant(20, 1.0))), InvalidInput);
  EXPECT_THROW(anderson_darling(test::gaussian_noise(9, 2)), InvalidInput);
}

TEST(ArSieve, DefaultOrder) {
  EXPECT_EQ(default_sieve_order(100), 20);
  EXPECT_EQ(default_sieve_order(250), 23);
  EXPECT_EQ(default_sieve_order(1000), 30);
}

TEST(ArSieve, RecoversAr1Coefficient) {
  const Series s = test::ar1(0.6, law::Normal{}, 2000, 31);
  const ArSieveFit fit = fit_ar_sieve(s, default_sieve_order(s.size()));
  ASSERT_GE(fit.order, 1);
  EXPECT_NEAR(fit.coefficients[0], 0.6, 0.06);
  EXPECT_EQ(fit.residuals.size(), s.size() - fit.order);
  EXPECT_NEAR(fit.residuals.mean(), 0.0, 1e-12);
  EXPECT_NEAR(fit.innovation_variance, 1.0, 0.1);
}

TEST(ArSieve, WhiteNoisePrefersLowOrder) {
  const Series s = test::gaussian_noise(2000, 32);
  EXPECT_LE(fit_ar_sieve(s, 30).order, 3);
}

TEST(VavraTest, DeterministicAcrossThreadCounts) {
  const Series s = test::ar1(0.4, law::Normal{}, 150, 40);
  SieveConfig cfg;
  cfg.replications = 60;
  cfg.seed = RngStream(99);
  const VavraResult one = vavra_test(s, cfg);
  cfg.threads = 3;
  const VavraResult three = vavra_test(s, cfg);
  EXPECT_EQ(one.p_value, three.p_value);
  EXPECT_EQ(one.ad_bootstrap_mean, three.ad_bootstrap_mean);
  EXPECT_EQ(one.replications_used, 60);
  EXPECT_GT(one.p_value, 0.0);
  EXPECT_LE(one.p_value, 1.0);
}

TEST(VavraTest, DetectsSkewedMarginal) {
  SieveConfig cfg;
  cfg.replications = 100;
  cfg.seed = RngStream(3);
  EXPECT_LT(vavra_test(test::ar1(0.5, law::LogNormal{}, 200, 41), cfg).p_value, 0.05);
}

TEST(VavraTest, ResidualBootstrapRuns) {
  SieveConfig cfg;
  cfg.replications = 50;
  cfg.innovations = BootstrapInnovations::Residuals;
  const VavraResult r = vavra_test(test::gaussian_noise(120, 42), cfg);
  EXPECT_EQ(r.replications_used, 50);
}

}  // namespace
}  // namespace norts
