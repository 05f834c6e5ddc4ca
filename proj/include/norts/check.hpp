#pragma once

#include "norts/report.hpp"

#include <filesystem>
#include <optional>

namespace norts {

struct CheckConfig {
  std::string unit_root = "adf";  ///< adf | kpss | lb
  std::string normality = "rp";   ///< epps | lobato | rp | vavra
  double alpha = 0.05;
  bool emit_plot_data = false;
  std::filesystem::path plot_dir = ".";
  std::optional<std::uint64_t> seed;
  DispatchOptions test_options;  ///< method knobs (k, replications, ...); alpha/seed above win
};

struct CheckReport {
  TestReport stationarity;
  TestReport normality;
  bool stationary = false;
  bool gaussian = false;
  bool seasonal_skipped = false;  ///< period > 1; seasonal unit-root tests are not available

  std::string text() const;
  bool operator==(const CheckReport&) const = default;
};

std::string render_json(const CheckReport& report);

/// Unit-root test, then normality test, with conclusions at cfg.alpha. Writes the plot
/// CSVs into cfg.plot_dir when cfg.emit_plot_data is set.
CheckReport check(const Series& series, const CheckConfig& cfg);

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  int count = 0;
};

/// Freedman-Diaconis bin width 2 IQR n^{-1/3}; Sturges when the IQR is zero.
std::vector<HistogramBin> histogram_fd(const Vector& x);

/// Partial autocorrelations at lags 1..max_lag by Durbin-Levinson.
Vector sample_pacf(const Series& s, Eigen::Index max_lag);

/// residuals.csv, hist.csv, qq.csv, acf.csv.
void write_plot_data(const Series& s, const std::filesystem::path& dir);

}  // namespace norts
