#pragma once

#include "norts/rng.hpp"
#include "norts/series.hpp"

#include <optional>

namespace norts {

enum class BootstrapInnovations {
  Gaussian,   ///< N(0, residual variance): the null model
  Residuals,  ///< i.i.d. resampling of the centered sieve residuals
};

struct SieveConfig {
  int replications = 1000;
  std::optional<int> max_order;  ///< defaults to floor(10 log10 n)
  RngStream seed{0, 0};
  int burn_in = 100;
  BootstrapInnovations innovations = BootstrapInnovations::Gaussian;
  unsigned threads = 1;
};

struct VavraResult {
  double ad_observed = 0.0;
  double ad_bootstrap_mean = 0.0;
  double p_value = 1.0;
  int ar_order = 0;
  int replications_used = 0;
};

struct ArSieveFit {
  int order = 0;
  Vector coefficients;  ///< phi_1..phi_p on the demeaned series
  Vector residuals;     ///< length n - p, exact mean zero
  double innovation_variance = 0.0;
  double mean = 0.0;
};

/// Anderson-Darling distance A^2 of the standardized sample from N(0, 1).
/// Throws InvalidInput for n < 10 or zero variance.
double anderson_darling(const Series& s);

/// Same statistic on raw values; no length check. Standardizes with divisor-n variance.
double anderson_darling_statistic(const Vector& x);

/// Yule-Walker (Levinson-Durbin) fits of orders 0..max_order, order chosen by AIC
/// n log(sigma_p^2) + 2p.
ArSieveFit fit_ar_sieve(const Series& s, int max_order);

/// floor(10 log10 n).
int default_sieve_order(Eigen::Index n);

/// A_d with an AR-sieve bootstrap null distribution. Replicate r uses cfg.seed.split(r).
VavraResult vavra_test(const Series& s, const SieveConfig& cfg);

}  // namespace norts
