#include "norts/lobato.hpp"

#include "norts/distributions.hpp"

#include <cmath>

namespace norts {

double fk_hat_from_autocov(const Vector& autocov, int k) {
  if (k != 3 && k != 4) throw InvalidInput("fk_hat: k must be 3 or 4");
  const Eigen::Index n = autocov.size();
  if (n == 0) throw InvalidInput("fk_hat: empty autocovariance");
  // t = 0 term (gamma(n) := 0), then t and -t contribute equally.
  double sum = std::pow(autocov[0], k);
  for (Eigen::Index t = 1; t < n; ++t) {
    sum += 2.0 * autocov[t] * std::pow(autocov[t] + autocov[n - t], k - 1);
  }
  return sum;
}

double fk_hat(const Series& s, int k) {
  if (k != 3 && k != 4) throw InvalidInput("fk_hat: k must be 3 or 4");
  require_length(s, 1, "fk_hat");
  return fk_hat_from_autocov(sample_autocov_all(s, s.size() - 1), k);
}

LobatoResult lobato_test(const Series& s) {
  require_length(s, 10, "lobato");
  const Vector autocov = sample_autocov_all(s, s.size() - 1);
  if (!(autocov[0] > 0.0)) throw InvalidInput("lobato: zero variance");

  const double f3 = fk_hat_from_autocov(autocov, 3);
  const double f4 = fk_hat_from_autocov(autocov, 4);
  if (!(f3 > 0.0) || !(f4 > 0.0)) {
    throw NumericDegeneracy("lobato: non-positive long-run moment estimate (F3 = " + std::to_string(f3) +
                            ", F4 = " + std::to_string(f4) + ")");
  }

  const double n = static_cast<double>(s.size());
  const double mu2 = autocov[0];
  const double mu3 = sample_central_moment(s, 3);
  const double mu4 = sample_central_moment(s, 4);
  const double excess = mu4 - 3.0 * mu2 * mu2;

  LobatoResult out;
  out.skewness_term = n * mu3 * mu3 / (6.0 * f3);
  out.kurtosis_term = n * excess * excess / (24.0 * f4);
  out.statistic = out.skewness_term + out.kurtosis_term;
  out.p_value = chi2_sf(out.statistic, out.df);
  return out;
}

}  // namespace norts
