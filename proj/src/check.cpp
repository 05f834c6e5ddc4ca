#include "norts/check.hpp"

#include "norts/distributions.hpp"
#include "norts/vavra.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace norts {

namespace {

constexpr const char* kBanner = " ***************************************************";

double quantile_type7(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  return out;
}

void check_written(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace

std::vector<HistogramBin> histogram_fd(const Vector& x) {
  if (x.size() == 0) return {};
  std::vector<double> sorted(x.data(), x.data() + x.size());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  const double n = static_cast<double>(sorted.size());
  const double iqr = quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);

  std::size_t bins = 1;
  if (hi > lo) {
    if (iqr > 0.0) {
      const double width = 2.0 * iqr / std::cbrt(n);
      bins = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / width)));
    } else {
      bins = static_cast<std::size_t>(std::ceil(std::log2(n) + 1.0));
    }
  }
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].left = lo + width * static_cast<double>(b);
    out[b].right = (b + 1 == bins) ? (hi > lo ? hi : lo + 1.0) : lo + width * static_cast<double>(b + 1);
  }
  for (double v : sorted) {
    auto b = static_cast<std::size_t>(hi > lo ? std::floor((v - lo) / width) : 0.0);
    ++out[std::min(b, bins - 1)].count;
  }
  return out;
}

Vector sample_pacf(const Series& s, Eigen::Index max_lag) {
  const Vector acv = sample_autocov_all(s, max_lag);
  if (!(acv[0] > 0.0)) throw InvalidInput("pacf: zero variance");
  Vector pacf(max_lag);
  Vector phi = Vector::Zero(max_lag);
  Vector prev = Vector::Zero(max_lag);
  double v = acv[0];
  for (Eigen::Index p = 1; p <= max_lag; ++p) {
    double num = acv[p];
    for (Eigen::Index j = 1; j < p; ++j) num -= prev[j - 1] * acv[p - j];
    const double reflection = num / v;
    phi[p - 1] = reflection;
    for (Eigen::Index j = 1; j < p; ++j) phi[j - 1] = prev[j - 1] - reflection * prev[p - j - 1];
    v *= (1.0 - reflection * reflection);
    prev = phi;
    pacf[p - 1] = reflection;
  }
  return pacf;
}

void write_plot_data(const Series& s, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  const Eigen::Index n = s.size();

  {
    const auto path = dir / "residuals.csv";
    auto out = open_csv(path);
    out << "t,value\n";
    for (Eigen::Index t = 0; t < n; ++t) out << (t + 1) << ',' << s[t] << '\n';
    check_written(out, path);
  }
  {
    const auto path = dir / "hist.csv";
    auto out = open_csv(path);
    out << "bin_left,bin_right,count\n";
    for (const auto& b : histogram_fd(s.values())) out << b.left << ',' << b.right << ',' << b.count << '\n';
    check_written(out, path);
  }
  {
    const auto path = dir / "qq.csv";
    auto out = open_csv(path);
    out << "theoretical_quantile,sample_quantile\n";
    std::vector<double> sorted(s.values().data(), s.values().data() + n);
    std::sort(sorted.begin(), sorted.end());
    const double a = n <= 10 ? 0.375 : 0.5;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double p = (static_cast<double>(i + 1) - a) / (static_cast<double>(n) + 1.0 - 2.0 * a);
      out << normal_quantile(p) << ',' << sorted[static_cast<std::size_t>(i)] << '\n';
    }
    check_written(out, path);
  }
  {
    const auto path = dir / "acf.csv";
    auto out = open_csv(path);
    out << "lag,acf,pacf,band\n";
    const Eigen::Index max_lag = std::min<Eigen::Index>(default_sieve_order(n), n - 1);
    if (max_lag >= 1) {
      const Vector acv = sample_autocov_all(s, max_lag);
      const Vector pacf = sample_pacf(s, max_lag);
      const double band = 1.96 / std::sqrt(static_cast<double>(n));
      for (Eigen::Index h = 1; h <= max_lag; ++h) {
        out << h << ',' << acv[h] / acv[0] << ',' << pacf[h - 1] << ',' << band << '\n';
      }
    }
    check_written(out, path);
  }
}

CheckReport check(const Series& series, const CheckConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw UsageError("alpha must lie in (0, 1)");
  const auto is_one_of = [](const std::string& v, std::initializer_list<const char*> options) {
    return std::any_of(options.begin(), options.end(), [&](const char* o) { return v == o; });
  };
  if (!is_one_of(cfg.unit_root, {"adf", "kpss", "lb"})) {
    throw UsageError("unknown unit-root test '" + cfg.unit_root + "'; valid: adf, kpss, lb");
  }
  if (!is_one_of(cfg.normality, {"epps", "lobato", "rp", "vavra"})) {
    throw UsageError("unknown normality test '" + cfg.normality + "'; valid: epps, lobato, rp, vavra");
  }

  DispatchOptions options = cfg.test_options;
  options.alpha = cfg.alpha;
  options.seed = cfg.seed ? cfg.seed : options.seed;
  options.data_name = "y";
  options.stationarity_pretest = false;

  CheckReport report;
  report.seasonal_skipped = series.period() > 1;
  report.stationarity = test_dispatch(cfg.unit_root, series, options);
  const bool reject_unit = report.stationarity.p_value < cfg.alpha;
  // ADF rejects toward stationarity; KPSS and Ljung-Box reject against it.
  report.stationary = (cfg.unit_root == "adf") ? reject_unit : !reject_unit;
  report.normality = test_dispatch(cfg.normality, series, options);
  report.gaussian = !(report.normality.p_value < cfg.alpha);

  if (cfg.emit_plot_data) write_plot_data(series, cfg.plot_dir);
  return report;
}

std::string CheckReport::text() const {
  std::ostringstream os;
  os << kBanner << "\n\n";
  os << " Unit root test for stationarity:\n";
  os << render_text(stationarity) << "\n";
  os << " Conclusion: " << stationarity.data_name << (stationary ? " is stationary" : " is not stationary") << "\n";
  if (seasonal_skipped) os << " Seasonal tests: not implemented\n";
  os << kBanner << "\n\n";
  os << " Goodness of fit test for Gaussian Distribution:\n";
  os << render_text(normality) << "\n";
  os << " Conclusion: " << normality.data_name
     << (gaussian ? " follows a Gaussian Process" : " does not follow a Gaussian Process") << "\n\n";
  os << kBanner << "\n";
  os << " Verdict: "
     << (stationary && gaussian ? "residuals behave as a stationary Gaussian process"
                                : "residual assumptions are not satisfied")
     << "\n";
  return os.str();
}

std::string render_json(const CheckReport& report) {
  using nlohmann::json;
  json j = {{"stationarity", json::parse(render_json(report.stationarity))},
            {"normality", json::parse(render_json(report.normality))},
            {"stationary", report.stationary},
            {"gaussian", report.gaussian},
            {"seasonal_tests", report.seasonal_skipped ? "not implemented" : "not applicable"}};
  return j.dump(2);
}

}  // namespace norts
