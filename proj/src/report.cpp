#include "norts/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

namespace norts {

namespace {

using nlohmann::json;

std::string printf_g(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string render_field(const ReportField& f) {
  return f.name + " = " + (f.integral ? std::to_string(static_cast<long long>(f.value)) : format_statistic(f.value));
}

json to_json(const TestReport& r) {
  json fields = json::array();
  for (const auto& f : r.fields) fields.push_back({{"name", f.name}, {"value", f.value}, {"integral", f.integral}});
  json j = {{"method", r.method},
            {"title", r.title},
            {"data_name", r.data_name},
            {"fields", fields},
            {"df", r.df ? json(*r.df) : json(nullptr)},
            {"p_value", r.p_value},
            {"p_value_bounded", r.p_value_bounded},
            {"alternative", r.alternative},
            {"seed", r.seed ? json(*r.seed) : json(nullptr)},
            {"warnings", r.warnings}};
  return j;
}

TestReport from_json(const json& j) {
  TestReport r;
  r.method = j.at("method").get<std::string>();
  r.title = j.at("title").get<std::string>();
  r.data_name = j.at("data_name").get<std::string>();
  for (const auto& f : j.at("fields")) {
    r.fields.push_back({f.at("name").get<std::string>(), f.at("value").get<double>(), f.at("integral").get<bool>()});
  }
  if (!j.at("df").is_null()) r.df = j.at("df").get<int>();
  r.p_value = j.at("p_value").get<double>();
  r.p_value_bounded = j.at("p_value_bounded").get<bool>();
  r.alternative = j.at("alternative").get<std::string>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string gaussian_alternative(const std::string& data_name) {
  return data_name + " does not follow a Gaussian Process";
}

}  // namespace

std::string format_statistic(double v) { return printf_g(v, 5); }

std::string format_p_value(double p) {
  if (p < std::numeric_limits<double>::epsilon()) return "< 2.2e-16";
  return printf_g(p, 4);
}

std::string render_text(const TestReport& report) {
  std::ostringstream os;
  os << "\n\t" << report.title << "\n\n";
  os << "data:  " << report.data_name << "\n";
  std::string line;
  for (const auto& f : report.fields) line += render_field(f) + ", ";
  if (report.df) line += "df = " + std::to_string(*report.df) + ", ";
  const std::string p = format_p_value(report.p_value);
  line += "p-value " + (p.front() == '<' ? p : "= " + p);
  os << line << "\n";
  os << "alternative hypothesis: " << report.alternative << "\n";
  if (report.seed) os << "seed: " << *report.seed << "\n";
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string render_json(const TestReport& report) { return to_json(report).dump(2); }

TestReport parse_json_report(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report JSON: ") + e.what());
  }
}

TestReport make_report(const EppsResult& r, const std::string& data_name) {
  TestReport out;
  out.method = "epps";
  out.title = "Epps test";
  out.data_name = data_name;
  out.fields = {{"epps", r.statistic, false}};
  out.df = r.df;
  out.p_value = r.p_value;
  out.alternative = gaussian_alternative(data_name);
  if (!r.converged) out.warnings.push_back("optimizer did not converge within 500 iterations");
  return out;
}

TestReport make_report(const LobatoResult& r, const std::string& data_name) {
  TestReport out;
  out.method = "lobato";
  out.title = "Lobato and Velasco's test";
  out.data_name = data_name;
  out.fields = {{"lobato", r.statistic, false}};
  out.df = r.df;
  out.p_value = r.p_value;
  out.alternative = gaussian_alternative(data_name);
  return out;
}

TestReport make_report(const RpResult& r, const std::string& data_name) {
  TestReport out;
  out.method = "rp";
  out.title = "k random projections test";
  out.data_name = data_name;
  out.fields = {{"k", static_cast<double>(r.k), true}, {"lobato", r.avg_lobato, false}, {"epps", r.avg_epps, false}};
  out.p_value = r.p_value;
  out.alternative = gaussian_alternative(data_name);
  return out;
}

TestReport make_report(const VavraResult& r, const std::string& data_name) {
  TestReport out;
  out.method = "vavra";
  out.title = "Psaradakis-Vavra test";
  out.data_name = data_name;
  out.fields = {{"A", r.ad_observed, false},
                {"bootstrap A", r.ad_bootstrap_mean, false},
                {"AR order", static_cast<double>(r.ar_order), true},
                {"replications", static_cast<double>(r.replications_used), true}};
  out.p_value = r.p_value;
  out.alternative = gaussian_alternative(data_name);
  return out;
}

TestReport make_report(const UnitRootReport& r, const std::string& data_name) {
  TestReport out;
  out.method = r.method;
  out.data_name = data_name;
  out.p_value = r.p_value;
  out.p_value_bounded = r.bounded;
  if (r.method == "adf") {
    out.title = "Augmented Dickey-Fuller Test";
    out.fields = {{"Dickey-Fuller", r.statistic, false}, {"Lag order", static_cast<double>(r.lag_order), true}};
    out.alternative = "stationary";
    if (r.bounded) {
      out.warnings.push_back(r.p_value <= 0.01 ? "p-value smaller than printed p-value"
                                               : "p-value greater than printed p-value");
    }
  } else if (r.method == "kpss") {
    out.title = "KPSS Test for Level Stationarity";
    out.fields = {{"KPSS Level", r.statistic, false},
                  {"Truncation lag parameter", static_cast<double>(r.lag_order), true}};
    out.alternative = "non-stationary";
    if (r.bounded) {
      out.warnings.push_back(r.p_value <= 0.01 ? "p-value smaller than printed p-value"
                                               : "p-value greater than printed p-value");
    }
  } else {
    out.title = "Box-Ljung test";
    out.fields = {{"X-squared", r.statistic, false}};
    out.df = r.lag_order;
    out.alternative = data_name + " is serially correlated";
  }
  return out;
}

const std::vector<std::string>& dispatch_methods() {
  static const std::vector<std::string> methods = {"epps", "lobato", "rp", "vavra", "adf", "kpss", "lb"};
  return methods;
}

TestReport test_dispatch(const std::string& method, const Series& s, const DispatchOptions& options) {
  const auto& known = dispatch_methods();
  if (std::find(known.begin(), known.end(), method) == known.end()) {
    std::string list;
    for (const auto& m : known) list += (list.empty() ? "" : ", ") + m;
    throw UsageError("unknown method '" + method + "'; valid methods: " + list);
  }
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) throw UsageError("alpha must lie in (0, 1)");

  const std::string& name = options.data_name;
  if (method == "adf") return make_report(adf_test(s, options.alpha), name);
  if (method == "kpss") return make_report(kpss_test(s, options.alpha), name);
  if (method == "lb") return make_report(ljung_box(s, options.lb_lags, options.alpha), name);

  std::vector<std::string> pretest_warnings;
  if (options.stationarity_pretest && s.size() >= 30) {
    try {
      const auto adf = adf_test(s, options.alpha);
      if (adf.conclusion == Conclusion::NonStationary) {
        pretest_warnings.push_back("stationarity pre-test: ADF does not reject a unit root (p-value = " +
                                   format_p_value(adf.p_value) + "); the test assumes a stationary process");
      }
    } catch (const std::exception& e) {
      pretest_warnings.push_back(std::string("stationarity pre-test could not run: ") + e.what());
    }
  }

  const std::uint64_t seed = options.seed ? *options.seed : [] {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }();

  TestReport report;
  if (method == "epps") {
    std::optional<Lambda> lambda;
    if (options.lambda) lambda = Lambda(*options.lambda);
    report = make_report(epps_test(s, lambda), name);
  } else if (method == "lobato") {
    report = make_report(lobato_test(s), name);
  } else if (method == "rp") {
    ProjectionConfig cfg;
    cfg.k = options.rp_k;
    cfg.pars1 = options.rp_pars1;
    cfg.pars2 = options.rp_pars2;
    cfg.seed = RngStream(seed);
    report = make_report(rp_test(s, cfg), name);
    report.seed = seed;
  } else {
    SieveConfig cfg;
    cfg.replications = options.vavra_replications;
    cfg.innovations = options.vavra_innovations;
    cfg.seed = RngStream(seed);
    cfg.threads = options.threads;
    report = make_report(vavra_test(s, cfg), name);
    report.seed = seed;
  }
  report.warnings.insert(report.warnings.begin(), pretest_warnings.begin(), pretest_warnings.end());
  return report;
}

}  // namespace norts
