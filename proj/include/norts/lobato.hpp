#pragma once

#include "norts/series.hpp"

namespace norts {

struct LobatoResult {
  double statistic = 0.0;  ///< G = skewness_term + kurtosis_term
  int df = 2;
  double p_value = 1.0;
  double skewness_term = 0.0;  ///< n mu3^2 / (6 F3)
  double kurtosis_term = 0.0;  ///< n (mu4 - 3 mu2^2)^2 / (24 F4)
};

/**
 * @brief Autocovariance-based estimate of sum_j gamma(j)^k, k in {3, 4}.
 *
 * F_k = sum_{t=1-n}^{n-1} gamma(|t|) [gamma(|t|) + gamma(n - |t|)]^{k-1}, where the
 * only undefined lag, gamma(n) at t = 0, is taken as zero.
 */
double fk_hat(const Series& s, int k);

/// Same sum computed from a precomputed autocovariance vector gamma(0..n-1).
double fk_hat_from_autocov(const Vector& autocov, int k);

/// Generalized skewness-kurtosis test for the Gaussian marginal of a stationary process.
/// Throws InvalidInput (n < 10, zero variance) or NumericDegeneracy (F_k <= 0).
LobatoResult lobato_test(const Series& s);

}  // namespace norts
