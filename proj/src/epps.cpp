#include "norts/epps.hpp"

#include "norts/distributions.hpp"
#include "norts/optimize.hpp"

namespace norts {

namespace {

constexpr double kPinvRcond = 1e-10;

Matrix deviations(const Series& s, const Lambda& lambda, const Vector& mean_g) {
  const Eigen::Index n = s.size();
  Matrix d(n, 2 * lambda.size());
  for (Eigen::Index t = 0; t < n; ++t) d.row(t) = (g_vector(s[t], lambda) - mean_g).transpose();
  return d;
}

double quadratic_form(const Vector& diff, const Matrix& weight) { return diff.dot(weight * diff); }

}  // namespace

Lambda::Lambda(std::vector<double> points) : points_(Eigen::Map<Vector>(points.data(), points.size())) {
  if (points_.size() < 2) throw InvalidInput("lambda: need at least two evaluation points");
  for (Eigen::Index i = 0; i < points_.size(); ++i) {
    if (!(points_[i] > 0.0) || !std::isfinite(points_[i])) throw InvalidInput("lambda: points must be positive");
    if (i > 0 && points_[i] < points_[i - 1]) throw InvalidInput("lambda: points must be nondecreasing");
  }
}

Vector g_theta(const ThetaParams& theta, const Lambda& lambda) {
  Vector g(2 * lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const double l = lambda[k];
    const double damping = std::exp(-0.5 * l * l * theta.sigma2);
    g[2 * k] = damping * std::cos(l * theta.mu);
    g[2 * k + 1] = damping * std::sin(l * theta.mu);
  }
  return g;
}

Matrix spectral_zero(const Series& s, const Lambda& lambda) {
  const Eigen::Index n = s.size();
  if (n == 0) throw InvalidInput("spectral_zero: empty series");
  const Matrix d = deviations(s, lambda, g_hat(s, lambda));
  const auto bandwidth = static_cast<Eigen::Index>(std::floor(std::pow(static_cast<double>(n), 0.4)));

  Matrix acc = d.transpose() * d;
  for (Eigen::Index i = 1; i <= bandwidth && i < n; ++i) {
    const double w = 1.0 - static_cast<double>(i) / static_cast<double>(bandwidth);
    if (w <= 0.0) continue;
    const Matrix cross = d.topRows(n - i).transpose() * d.bottomRows(n - i);
    acc += w * (cross + cross.transpose());
  }
  acc /= static_cast<double>(n);
  return 0.5 * (acc + acc.transpose());
}

double qn(const Series& s, const ThetaParams& theta, const Lambda& lambda) {
  const Matrix weight = pseudo_inverse(spectral_zero(s, lambda), kPinvRcond);
  return quadratic_form(g_hat(s, lambda) - g_theta(theta, lambda), weight);
}

Lambda default_lambda(const Series& s) {
  const double sd = std::sqrt(sample_autocov(s, 0));
  if (!(sd > 0.0)) throw InvalidInput("epps: zero variance");
  return Lambda({1.0 / sd, 2.0 / sd});
}

EppsResult epps_test(const Series& s, const std::optional<Lambda>& lambda_opt) {
  require_length(s, 10, "epps");
  const double mu0 = sample_mean(s);
  const double var0 = sample_autocov(s, 0);
  if (!(var0 > 0.0)) throw InvalidInput("epps: zero variance");
  const double sd0 = std::sqrt(var0);
  const Lambda lambda = lambda_opt ? *lambda_opt : default_lambda(s);

  const Vector moments = g_hat(s, lambda);
  const Matrix weight = pseudo_inverse(spectral_zero(s, lambda), kPinvRcond);

  // Search in standardized coordinates: mu = mu0 + sd0 * u0, sigma^2 = var0 * exp(u1).
  auto to_theta = [&](const Vector& u) { return ThetaParams{mu0 + sd0 * u[0], var0 * std::exp(u[1])}; };
  auto objective = [&](const Vector& u) {
    return quadratic_form(moments - g_theta(to_theta(u), lambda), weight);
  };
  NelderMeadOptions options;
  options.f_tolerance = 1e-10;
  options.max_iterations = 500;
  const auto fit = nelder_mead(objective, Vector::Zero(2), Vector::Constant(2, 0.1), options);

  EppsResult out;
  out.statistic = std::max(0.0, static_cast<double>(s.size()) * fit.value);
  out.df = static_cast<int>(2 * lambda.size() - 2);
  out.p_value = chi2_sf(out.statistic, out.df);
  out.theta_hat = to_theta(fit.x);
  out.converged = fit.converged;
  out.iterations = fit.iterations;
  out.lambda.assign(lambda.points().data(), lambda.points().data() + lambda.size());
  return out;
}

}  // namespace norts
