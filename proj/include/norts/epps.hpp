#pragma once

#include "norts/series.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace norts {

/// Evaluation points of the empirical characteristic function: N >= 2, positive, nondecreasing.
class Lambda {
 public:
  explicit Lambda(std::vector<double> points);
  const Vector& points() const { return points_; }
  Eigen::Index size() const { return points_.size(); }
  double operator[](Eigen::Index i) const { return points_[i]; }

 private:
  Vector points_;
};

/// theta = (mu, sigma^2) of the Gaussian marginal.
struct ThetaParams {
  double mu = 0.0;
  double sigma2 = 1.0;
};

struct EppsResult {
  double statistic = 0.0;  ///< n * min_theta Q_n(theta, lambda)
  int df = 0;              ///< 2N - 2
  double p_value = 1.0;
  ThetaParams theta_hat;
  bool converged = false;
  int iterations = 0;
  std::vector<double> lambda;
};

/// (cos(l_1 x), sin(l_1 x), ..., cos(l_N x), sin(l_N x)).
template <typename Scalar>
VectorX<Scalar> g_vector(Scalar x, const Lambda& lambda) {
  VectorX<Scalar> g(2 * lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    g[2 * k] = std::cos(lambda[k] * x);
    g[2 * k + 1] = std::sin(lambda[k] * x);
  }
  return g;
}

/// Real and imaginary parts of the N(mu, sigma^2) characteristic function at each lambda.
Vector g_theta(const ThetaParams& theta, const Lambda& lambda);

/// Sample mean of g_vector over the observations.
template <typename Derived>
VectorX<typename Derived::Scalar> g_hat(const Eigen::MatrixBase<Derived>& x, const Lambda& lambda) {
  using Scalar = typename Derived::Scalar;
  VectorX<Scalar> acc = VectorX<Scalar>::Zero(2 * lambda.size());
  for (Eigen::Index t = 0; t < x.size(); ++t) acc += g_vector<Scalar>(x[t], lambda);
  return acc / static_cast<Scalar>(x.size());
}
inline Vector g_hat(const Series& s, const Lambda& lambda) { return g_hat(s.values(), lambda); }

/// 2*pi * f_hat(0): Bartlett-weighted long-run covariance of g(X_t, lambda) with
/// truncation lag floor(n^{2/5}). Exactly symmetric. Does not depend on theta.
Matrix spectral_zero(const Series& s, const Lambda& lambda);

/// Q_n(theta, lambda) using the pseudoinverse (rcond 1e-10) of spectral_zero.
double qn(const Series& s, const ThetaParams& theta, const Lambda& lambda);

/// lambda = (1, 2) / sqrt(gamma_hat(0)).
Lambda default_lambda(const Series& s);

/// Minimizes Q_n over theta by Nelder-Mead from (mu_hat, gamma_hat(0)); statistic n * Q_n.
/// Throws InvalidInput for n < 10 or zero variance.
EppsResult epps_test(const Series& s, const std::optional<Lambda>& lambda = std::nullopt);

}  // namespace norts
