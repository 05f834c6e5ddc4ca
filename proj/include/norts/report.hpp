#pragma once

#include "norts/epps.hpp"
#include "norts/lobato.hpp"
#include "norts/rp.hpp"
#include "norts/stationarity.hpp"
#include "norts/vavra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace norts {

/// One "name = value" entry of a report line.
struct ReportField {
  std::string name;
  double value = 0.0;
  bool integral = false;

  bool operator==(const ReportField&) const = default;
};

/// Uniform test outcome, rendered in the classic hypothesis-test print layout.
struct TestReport {
  std::string method;  ///< dispatch label, e.g. "epps"
  std::string title;   ///< e.g. "Epps test"
  std::string data_name = "x";
  std::vector<ReportField> fields;
  std::optional<int> df;
  double p_value = 1.0;
  bool p_value_bounded = false;
  std::string alternative;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> warnings;

  bool operator==(const TestReport&) const = default;
};

/// Five significant digits, like the usual statistical print defaults.
std::string format_statistic(double v);
/// Four significant digits; "< 2.2e-16" below machine epsilon.
std::string format_p_value(double p);

std::string render_text(const TestReport& report);
std::string render_json(const TestReport& report);
TestReport parse_json_report(const std::string& text);

TestReport make_report(const EppsResult& r, const std::string& data_name = "x");
TestReport make_report(const LobatoResult& r, const std::string& data_name = "x");
TestReport make_report(const RpResult& r, const std::string& data_name = "x");
TestReport make_report(const VavraResult& r, const std::string& data_name = "x");
TestReport make_report(const UnitRootReport& r, const std::string& data_name = "x");

struct DispatchOptions {
  double alpha = 0.05;
  std::optional<std::uint64_t> seed;  ///< entropy-seeded (and echoed) when absent
  std::optional<std::vector<double>> lambda;
  int rp_k = 64;
  BetaPars rp_pars1{2.0, 7.0};
  BetaPars rp_pars2{100.0, 1.0};
  int vavra_replications = 1000;
  BootstrapInnovations vavra_innovations = BootstrapInnovations::Gaussian;
  int lb_lags = 10;
  unsigned threads = 1;
  bool stationarity_pretest = true;  ///< run ADF before normality tests and warn on failure
  std::string data_name = "x";
};

/// Methods understood by test_dispatch.
const std::vector<std::string>& dispatch_methods();

/// Routes `method` to its module. Unknown methods throw UsageError.
TestReport test_dispatch(const std::string& method, const Series& s, const DispatchOptions& options = {});

}  // namespace norts
