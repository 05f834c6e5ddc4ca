#pragma once

#include "norts/distributions.hpp"
#include "norts/rng.hpp"
#include "norts/series.hpp"

#include <vector>

namespace norts {

/// X_t = sum phi_i X_{t-i} + eps_t + sum theta_j eps_{t-j}.
struct ArmaSpec {
  std::vector<double> ar;
  std::vector<double> ma;
  InnovationLaw innovation = law::Normal{};
};

/// X_t = mu + sigma_t z_t, sigma_t^2 = alpha0 + sum alpha_i (X_{t-i} - mu)^2 + sum beta_j sigma_{t-j}^2.
struct GarchSpec {
  double alpha0 = 1.0;
  std::vector<double> alpha;
  std::vector<double> beta;
  double mu = 0.0;
};

/// alpha0 substituted when a GARCH spec requests alpha0 = 0.
inline constexpr double kGarchAlpha0Floor = 1e-6;

/// True when every root of 1 - sum phi_i z^i lies strictly outside the unit circle.
bool is_stationary_ar(const std::vector<double>& ar);

/// Runs burn_in + n steps from zero initial state and keeps the last n.
Series simulate_arma(const ArmaSpec& spec, Eigen::Index n, Eigen::Index burn_in, RngStream& rng);

/// Variance recursion seeded at the unconditional variance; Gaussian z_t.
Series simulate_garch(const GarchSpec& spec, Eigen::Index n, Eigen::Index burn_in, RngStream& rng);

}  // namespace norts
