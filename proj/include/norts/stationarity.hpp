#pragma once

#include "norts/series.hpp"

#include <string>

namespace norts {

enum class Conclusion { Stationary, NonStationary };

struct UnitRootReport {
  std::string method;  ///< "adf", "kpss" or "lb"
  double statistic = 0.0;
  int lag_order = 0;
  double p_value = 1.0;
  bool bounded = false;  ///< p-value was clamped to the edge of its table
  Conclusion conclusion = Conclusion::Stationary;
};

/// Portmanteau Q = n(n+2) sum_{h<=lags} rho(h)^2 / (n-h) against chi2(lags).
/// Rejection (serial dependence) is reported as NonStationary.
UnitRootReport ljung_box(const Series& s, int lags = 10, double alpha = 0.05);

/// Augmented Dickey-Fuller with constant and trend, lag order floor((n-1)^{1/3}).
/// Rejecting the unit root means Stationary.
UnitRootReport adf_test(const Series& s, double alpha = 0.05);

/// floor((n-1)^{1/3}).
int adf_lag_order(Eigen::Index n);

/// KPSS level stationarity, Bartlett long-run variance with lag floor(4 (n/100)^{1/4}).
/// Rejecting means NonStationary.
UnitRootReport kpss_test(const Series& s, double alpha = 0.05);

/// Piecewise-linear interpolation with clamping at both ends (flag set when clamped).
double interpolate_clamped(const double* xs, const double* ys, std::size_t count, double x, bool* clamped);

}  // namespace norts
