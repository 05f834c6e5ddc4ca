#include "norts/harness.hpp"

#include "norts/epps.hpp"
#include "norts/lobato.hpp"
#include "norts/simulate.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

namespace norts {

namespace {

std::atomic<bool> g_stop{false};

constexpr const char* kCsvHeader = "method,law,phi,n,rate,trials,seconds_per_trial";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted.push_back('"');
    quoted.push_back(ch);
  }
  return quoted + "\"";
}

}  // namespace

void request_stop() { g_stop.store(true); }
void clear_stop() { g_stop.store(false); }

std::string format_shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::string method_label(Method m) {
  switch (m) {
    case Method::Lobato:
      return "lobato";
    case Method::Epps:
      return "epps";
    case Method::RandomProjections:
      return "rp";
    case Method::Vavra:
      return "vavra";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "lobato") return Method::Lobato;
  if (text == "epps") return Method::Epps;
  if (text == "rp") return Method::RandomProjections;
  if (text == "vavra") return Method::Vavra;
  throw UsageError("unknown method '" + text + "' (valid: lobato, epps, rp, vavra)");
}

TestOutcome run_method(const MethodConfig& config, const Series& s, const RngStream& seed) {
  switch (config.method) {
    case Method::Lobato: {
      const auto r = lobato_test(s);
      return {r.statistic, r.p_value};
    }
    case Method::Epps: {
      const auto r = epps_test(s);
      return {r.statistic, r.p_value};
    }
    case Method::RandomProjections: {
      ProjectionConfig cfg;
      cfg.k = config.rp_k;
      cfg.pars1 = config.rp_pars1;
      cfg.pars2 = config.rp_pars2;
      cfg.seed = seed;
      const auto r = rp_test(s, cfg);
      return {r.avg_lobato, r.p_value};
    }
    case Method::Vavra: {
      SieveConfig cfg;
      cfg.replications = config.vavra_replications;
      cfg.innovations = config.vavra_innovations;
      cfg.seed = seed;
      const auto r = vavra_test(s, cfg);
      return {r.ad_observed, r.p_value};
    }
  }
  throw InvalidInput("unknown method");
}

ScenarioResult run_scenario_detailed(const ScenarioSpec& spec, const RunOptions& options) {
  if (!(std::abs(spec.phi) < 1.0)) throw InvalidSpec("scenario: |phi| must be < 1");
  if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) throw InvalidSpec("scenario: alpha must lie in (0, 1)");
  if (spec.trials < 1) throw InvalidSpec("scenario: trials must be positive");
  validate(spec.law);

  const ArmaSpec process{{spec.phi}, {}, spec.law};
  const auto trials = static_cast<std::size_t>(spec.trials);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  ScenarioResult result;
  result.outcomes.assign(trials, TestOutcome{nan, nan});
  std::vector<char> failed(trials, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr first_error;
  std::size_t first_error_trial = trials;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!abort.load() && !g_stop.load()) {
      const std::size_t j = next.fetch_add(1);
      if (j >= trials) break;
      try {
        const RngStream trial = spec.seed.split(j);
        RngStream data_rng = trial.split(0);
        const Series x = simulate_arma(process, spec.n, spec.burn_in, data_rng);
        result.outcomes[j] = run_method(spec.method, x, trial.split(1));
      } catch (...) {
        failed[j] = 1;
        if (!options.skip_failures) {
          std::lock_guard lock(error_mutex);
          if (j < first_error_trial) {
            first_error_trial = j;
            first_error = std::current_exception();
          }
          abort.store(true);
        }
      }
    }
  };

  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(trials)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (first_error) {
    try {
      std::rethrow_exception(first_error);
    } catch (const std::exception& e) {
      const std::string where = "trial " + std::to_string(first_error_trial + 1) + ": ";
      if (dynamic_cast<const NumericDegeneracy*>(&e)) throw NumericDegeneracy(where + e.what());
      throw InvalidInput(where + e.what());
    }
  }
  if (g_stop.load()) throw std::runtime_error("interrupted");

  for (std::size_t j = 0; j < trials; ++j) {
    if (failed[j]) {
      ++result.failures;
      continue;
    }
    ++result.trials_used;
    if (result.outcomes[j].p_value < spec.alpha) ++result.rejections;
  }
  if (result.trials_used == 0) throw NumericDegeneracy("scenario: every trial failed");
  result.rate = static_cast<double>(result.rejections) / result.trials_used;
  result.seconds_per_trial = seconds / static_cast<double>(trials);
  return result;
}

double run_scenario(const ScenarioSpec& spec, const RunOptions& options) {
  return run_scenario_detailed(spec, options).rate;
}

RejectionTable reproduce_tables(const StudyOptions& options, const std::filesystem::path& out) {
  std::ofstream csv(out);
  if (!csv) throw InvalidInput("cannot write " + out.string());
  csv << kCsvHeader << '\n' << std::flush;

  RejectionTable table;
  std::uint64_t scenario_index = 0;
  for (const auto& method : options.methods) {
    for (const auto& law : options.laws) {
      for (const Eigen::Index n : options.ns) {
        for (const double phi : options.phis) {
          ScenarioSpec spec;
          spec.phi = phi;
          spec.law = law;
          spec.n = n;
          spec.burn_in = options.burn_in;
          spec.trials = options.trials;
          spec.alpha = options.alpha;
          spec.method = method;
          spec.seed = options.seed.split(scenario_index++);
          if (g_stop.load()) return table;
          ScenarioResult r;
          try {
            r = run_scenario_detailed(spec, options.run);
          } catch (const std::runtime_error&) {
            if (g_stop.load()) return table;
            throw;
          }
          TableRow row{method_label(method.method), label(law), phi, n, r.rate, r.trials_used, r.seconds_per_trial};
          csv << row.method << ',' << csv_field(row.law) << ',' << format_shortest(row.phi) << ',' << row.n << ','
              << format_shortest(row.rate) << ',' << row.trials << ','
              << (options.record_timing ? format_shortest(row.seconds_per_trial) : std::string("NA")) << '\n'
              << std::flush;
          table.push_back(std::move(row));
        }
      }
    }
  }
  return table;
}

}  // namespace norts
