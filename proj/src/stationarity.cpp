#include "norts/stationarity.hpp"

#include "norts/critical_values.hpp"
#include "norts/distributions.hpp"

#include <Eigen/QR>

#include <cmath>

namespace norts {

namespace cv = critical_values;

double interpolate_clamped(const double* xs, const double* ys, std::size_t count, double x, bool* clamped) {
  // xs must be monotone (either direction).
  const bool increasing = xs[count - 1] > xs[0];
  auto before = [&](double a, double b) { return increasing ? a < b : a > b; };
  if (clamped) *clamped = false;
  if (before(x, xs[0])) {
    if (clamped) *clamped = true;
    return ys[0];
  }
  if (before(xs[count - 1], x)) {
    if (clamped) *clamped = true;
    return ys[count - 1];
  }
  for (std::size_t i = 1; i < count; ++i) {
    if (!before(xs[i], x)) {
      const double span = xs[i] - xs[i - 1];
      if (span == 0.0) return ys[i];
      return ys[i - 1] + (ys[i] - ys[i - 1]) * (x - xs[i - 1]) / span;
    }
  }
  return ys[count - 1];
}

UnitRootReport ljung_box(const Series& s, int lags, double alpha) {
  require_length(s, 10, "ljung_box");
  const Eigen::Index n = s.size();
  if (lags < 1 || 2 * static_cast<Eigen::Index>(lags) >= n) {
    throw InvalidInput("ljung_box: lags must satisfy 1 <= lags < n/2");
  }
  const Vector acv = sample_autocov_all(s, lags);
  if (!(acv[0] > 0.0)) throw InvalidInput("ljung_box: zero variance");
  const double nn = static_cast<double>(n);
  double q = 0.0;
  for (int h = 1; h <= lags; ++h) {
    const double rho = acv[h] / acv[0];
    q += rho * rho / (nn - h);
  }
  q *= nn * (nn + 2.0);

  UnitRootReport out;
  out.method = "lb";
  out.statistic = q;
  out.lag_order = lags;
  out.p_value = chi2_sf(q, lags);
  out.conclusion = out.p_value < alpha ? Conclusion::NonStationary : Conclusion::Stationary;
  return out;
}

int adf_lag_order(Eigen::Index n) {
  // Guard against cube roots of perfect cubes landing just below the integer.
  const double root = std::cbrt(static_cast<double>(n - 1));
  return static_cast<int>(std::floor(root + 1e-9));
}

UnitRootReport adf_test(const Series& s, double alpha) {
  require_length(s, 30, "adf");
  const Eigen::Index n = s.size();
  const int k = adf_lag_order(n);
  const Eigen::Index m = n - 1;  // number of differences
  Vector dy(m);
  for (Eigen::Index i = 0; i < m; ++i) dy[i] = s[i + 1] - s[i];

  const Eigen::Index rows = m - k;
  const Eigen::Index cols = 3 + k;
  if (rows <= cols) throw NumericDegeneracy("adf: too few observations for the regression");
  Matrix design(rows, cols);
  Vector response(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Index t = r + k;
    response[r] = dy[t];
    design(r, 0) = s[t];
    design(r, 1) = 1.0;
    design(r, 2) = static_cast<double>(t + 1);
    for (int j = 1; j <= k; ++j) design(r, 2 + j) = dy[t - j];
  }

  const Eigen::ColPivHouseholderQR<Matrix> qr(design);
  if (qr.rank() < cols) throw NumericDegeneracy("adf: rank-deficient regression");
  const Vector beta = qr.solve(response);
  const Vector resid = response - design * beta;
  const double sigma2 = resid.squaredNorm() / static_cast<double>(rows - cols);
  const Matrix xtx_inv = (design.transpose() * design).ldlt().solve(Matrix::Identity(cols, cols));
  const double se = std::sqrt(sigma2 * xtx_inv(0, 0));
  if (!(se > 0.0)) throw NumericDegeneracy("adf: zero standard error");
  const double stat = beta[0] / se;

  // Critical values at this sample size, then p-value from the statistic.
  std::array<double, cv::kAdfProbabilities.size()> at_n{};
  for (std::size_t j = 0; j < at_n.size(); ++j) {
    std::array<double, cv::kAdfSampleSizes.size()> column{};
    for (std::size_t i = 0; i < column.size(); ++i) column[i] = cv::kAdfTrend[i][j];
    at_n[j] = interpolate_clamped(cv::kAdfSampleSizes.data(), column.data(), column.size(),
                                  static_cast<double>(m), nullptr);
  }
  UnitRootReport out;
  out.method = "adf";
  out.statistic = stat;
  out.lag_order = k;
  out.p_value = interpolate_clamped(at_n.data(), cv::kAdfProbabilities.data(), at_n.size(), stat, &out.bounded);
  out.conclusion = out.p_value < alpha ? Conclusion::Stationary : Conclusion::NonStationary;
  return out;
}

UnitRootReport kpss_test(const Series& s, double alpha) {
  require_length(s, 30, "kpss");
  const Eigen::Index n = s.size();
  const double nn = static_cast<double>(n);
  const Vector e = s.values().array() - sample_mean(s);
  double s2 = e.squaredNorm() / nn;
  if (!(s2 > 0.0)) throw InvalidInput("kpss: zero variance");

  const int lags = static_cast<int>(std::floor(4.0 * std::pow(nn / 100.0, 0.25)));
  for (int i = 1; i <= lags; ++i) {
    double cross = 0.0;
    for (Eigen::Index t = i; t < n; ++t) cross += e[t] * e[t - i];
    s2 += 2.0 * (1.0 - i / (lags + 1.0)) * cross / nn;
  }
  if (!(s2 > 0.0)) throw NumericDegeneracy("kpss: non-positive long-run variance");

  double partial = 0.0;
  double eta = 0.0;
  for (Eigen::Index t = 0; t < n; ++t) {
    partial += e[t];
    eta += partial * partial;
  }
  eta /= nn * nn;

  UnitRootReport out;
  out.method = "kpss";
  out.statistic = eta / s2;
  out.lag_order = lags;
  out.p_value = interpolate_clamped(cv::kKpssLevel.data(), cv::kKpssProbabilities.data(), cv::kKpssLevel.size(),
                                    out.statistic, &out.bounded);
  out.conclusion = out.p_value < alpha ? Conclusion::NonStationary : Conclusion::Stationary;
  return out;
}

}  // namespace norts
