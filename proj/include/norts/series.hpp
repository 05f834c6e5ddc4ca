#pragma once

#include "norts/types.hpp"

#include <map>
#include <string>

namespace norts {

/// Ordered, equally spaced, finite observations with an optional seasonal period.
class Series {
 public:
  Series() = default;
  /// Throws InvalidInput if any value is NaN/Inf or the period is not positive.
  explicit Series(Vector values, int period = 1);

  const Vector& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  int period() const { return period_; }
  double operator[](Eigen::Index i) const { return values_[i]; }

 private:
  Vector values_;
  int period_ = 1;
};

/// Throws InvalidInput naming `what` when the series holds fewer than `min_length` points.
void require_length(const Series& s, Eigen::Index min_length, const std::string& what);

// Divisor-n sample estimators. The templates accept any Eigen column expression.

template <typename Derived>
typename Derived::Scalar sample_mean(const Eigen::MatrixBase<Derived>& x) {
  if (x.size() == 0) throw InvalidInput("sample_mean: empty series");
  return x.sum() / static_cast<typename Derived::Scalar>(x.size());
}

namespace detail {

template <typename Derived>
typename Derived::Scalar lagged_cross_sum(const Eigen::MatrixBase<Derived>& centered, Eigen::Index h) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = centered.size();
  Scalar acc(0);
  for (Eigen::Index i = 0; i + h < n; ++i) acc += centered[i + h] * centered[i];
  return acc;
}

}  // namespace detail

template <typename Derived>
typename Derived::Scalar sample_central_moment(const Eigen::MatrixBase<Derived>& x, int k) {
  using Scalar = typename Derived::Scalar;
  if (k < 2) throw InvalidInput("sample_central_moment: order must be >= 2");
  const Scalar mu = sample_mean(x);
  const VectorX<Scalar> d = x.array() - mu;
  const auto n = static_cast<Scalar>(x.size());
  if (k == 2) return detail::lagged_cross_sum(d, 0) / n;
  Scalar acc(0);
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    Scalar p = d[i];
    for (int j = 1; j < k; ++j) p *= d[i];
    acc += p;
  }
  return acc / n;
}

template <typename Derived>
typename Derived::Scalar sample_autocov(const Eigen::MatrixBase<Derived>& x, Eigen::Index h) {
  using Scalar = typename Derived::Scalar;
  if (h < 0 || h >= x.size()) throw InvalidInput("sample_autocov: lag must satisfy 0 <= h < n");
  const VectorX<Scalar> d = x.array() - sample_mean(x);
  return detail::lagged_cross_sum(d, h) / static_cast<Scalar>(x.size());
}

/// gamma_hat(0..max_lag) in one pass over the centered data.
template <typename Derived>
VectorX<typename Derived::Scalar> sample_autocov_all(const Eigen::MatrixBase<Derived>& x,
                                                     Eigen::Index max_lag) {
  using Scalar = typename Derived::Scalar;
  if (max_lag < 0 || max_lag >= x.size()) throw InvalidInput("sample_autocov_all: lag out of range");
  const VectorX<Scalar> d = x.array() - sample_mean(x);
  const auto n = static_cast<Scalar>(x.size());
  VectorX<Scalar> out(max_lag + 1);
  for (Eigen::Index h = 0; h <= max_lag; ++h) out[h] = detail::lagged_cross_sum(d, h) / n;
  return out;
}

inline double sample_mean(const Series& s) { return sample_mean(s.values()); }
inline double sample_central_moment(const Series& s, int k) { return sample_central_moment(s.values(), k); }
inline double sample_autocov(const Series& s, Eigen::Index h) { return sample_autocov(s.values(), h); }
inline Vector sample_autocov_all(const Series& s, Eigen::Index max_lag) {
  return sample_autocov_all(s.values(), max_lag);
}

struct SummaryMoments {
  double mean = 0.0;
  std::map<int, double> central_moments;
  std::map<Eigen::Index, double> autocov;
};

/// Mean, central moments 2..max_order and autocovariances 0..max_lag.
SummaryMoments summarize(const Series& s, int max_order, Eigen::Index max_lag);

}  // namespace norts
