#include "norts/series.hpp"

#include <cmath>

namespace norts {

Series::Series(Vector values, int period) : values_(std::move(values)), period_(period) {
  if (period_ < 1) throw InvalidInput("series period must be a positive integer");
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidInput("series value at index " + std::to_string(i) + " is not finite");
    }
  }
}

void require_length(const Series& s, Eigen::Index min_length, const std::string& what) {
  if (s.size() < min_length) {
    throw InvalidInput(what + ": series needs at least " + std::to_string(min_length) +
                       " observations, got " + std::to_string(s.size()));
  }
}

SummaryMoments summarize(const Series& s, int max_order, Eigen::Index max_lag) {
  SummaryMoments out;
  out.mean = sample_mean(s);
  for (int k = 2; k <= max_order; ++k) out.central_moments[k] = sample_central_moment(s, k);
  const Vector acv = sample_autocov_all(s, max_lag);
  for (Eigen::Index h = 0; h <= max_lag; ++h) out.autocov[h] = acv[h];
  return out;
}

}  // namespace norts
