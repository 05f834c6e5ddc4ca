#include "norts/simulate.hpp"

#include <Eigen/Eigenvalues>

#include <numeric>

namespace norts {

bool is_stationary_ar(const std::vector<double>& ar) {
  const auto p = static_cast<Eigen::Index>(ar.size());
  if (p == 0) return true;
  // Roots of phi(z) outside the unit circle <=> companion eigenvalues inside it.
  Matrix companion = Matrix::Zero(p, p);
  for (Eigen::Index i = 0; i < p; ++i) companion(0, i) = ar[i];
  for (Eigen::Index i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
  const Eigen::EigenSolver<Matrix> solver(companion, false);
  return (solver.eigenvalues().array().abs() < 1.0).all();
}

Series simulate_arma(const ArmaSpec& spec, Eigen::Index n, Eigen::Index burn_in, RngStream& rng) {
  if (n < 0 || burn_in < 0) throw InvalidInput("simulate_arma: n and burn_in must be non-negative");
  if (!is_stationary_ar(spec.ar)) throw InvalidSpec("simulate_arma: AR polynomial has a root on or inside the unit circle");
  validate(spec.innovation);

  const auto p = static_cast<Eigen::Index>(spec.ar.size());
  const auto q = static_cast<Eigen::Index>(spec.ma.size());
  const Eigen::Index total = burn_in + n;
  Vector x = Vector::Zero(total);
  Vector eps = Vector::Zero(total);
  for (Eigen::Index t = 0; t < total; ++t) {
    eps[t] = sample(spec.innovation, rng);
    double v = eps[t];
    for (Eigen::Index i = 1; i <= p && i <= t; ++i) v += spec.ar[i - 1] * x[t - i];
    for (Eigen::Index j = 1; j <= q && j <= t; ++j) v += spec.ma[j - 1] * eps[t - j];
    x[t] = v;
  }
  return Series(x.tail(n));
}

Series simulate_garch(const GarchSpec& spec, Eigen::Index n, Eigen::Index burn_in, RngStream& rng) {
  if (n < 0 || burn_in < 0) throw InvalidInput("simulate_garch: n and burn_in must be non-negative");
  for (double a : spec.alpha) {
    if (!(a >= 0.0)) throw InvalidSpec("simulate_garch: alpha coefficients must be non-negative");
  }
  for (double b : spec.beta) {
    if (!(b >= 0.0)) throw InvalidSpec("simulate_garch: beta coefficients must be non-negative");
  }
  const double persistence = std::accumulate(spec.alpha.begin(), spec.alpha.end(), 0.0) +
                             std::accumulate(spec.beta.begin(), spec.beta.end(), 0.0);
  if (!(persistence < 1.0)) throw InvalidSpec("simulate_garch: sum of alpha and beta must be < 1");
  double alpha0 = spec.alpha0;
  if (alpha0 < 0.0) throw InvalidSpec("simulate_garch: alpha0 must be positive");
  if (alpha0 == 0.0) {
    warn("simulate_garch: alpha0 = 0 gives a degenerate process; using alpha0 = 1e-6");
    alpha0 = kGarchAlpha0Floor;
  }

  const auto p = static_cast<Eigen::Index>(spec.alpha.size());
  const auto q = static_cast<Eigen::Index>(spec.beta.size());
  const Eigen::Index total = burn_in + n;
  const double unconditional = alpha0 / (1.0 - persistence);
  Vector x(total);
  Vector sigma2(total);
  for (Eigen::Index t = 0; t < total; ++t) {
    double s2 = alpha0;
    for (Eigen::Index i = 1; i <= p; ++i) {
      const double dev2 = (t - i >= 0) ? (x[t - i] - spec.mu) * (x[t - i] - spec.mu) : unconditional;
      s2 += spec.alpha[i - 1] * dev2;
    }
    for (Eigen::Index j = 1; j <= q; ++j) {
      s2 += spec.beta[j - 1] * ((t - j >= 0) ? sigma2[t - j] : unconditional);
    }
    sigma2[t] = s2;
    x[t] = spec.mu + std::sqrt(s2) * sample_normal(rng);
  }
  return Series(x.tail(n));
}

}  // namespace norts
