#pragma once

#include "norts/distributions.hpp"
#include "norts/rng.hpp"
#include "norts/rp.hpp"
#include "norts/series.hpp"
#include "norts/vavra.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace norts {

enum class Method { Lobato, Epps, RandomProjections, Vavra };

std::string method_label(Method m);
/// Accepts "lobato", "epps", "rp", "vavra".
Method parse_method(const std::string& text);

/// A normality test together with the knobs that matter for a study.
struct MethodConfig {
  Method method = Method::Lobato;
  int rp_k = 10;
  BetaPars rp_pars1{2.0, 7.0};
  BetaPars rp_pars2{100.0, 1.0};
  int vavra_replications = 300;
  BootstrapInnovations vavra_innovations = BootstrapInnovations::Gaussian;
};

/// One normality test run: statistic and p-value.
struct TestOutcome {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Runs the configured test; `seed` feeds the randomized tests (rp, vavra).
TestOutcome run_method(const MethodConfig& config, const Series& s, const RngStream& seed);

/// X_t = phi X_{t-1} + eps_t, eps_t i.i.d. from `law`, first burn_in points discarded.
struct ScenarioSpec {
  double phi = 0.0;
  InnovationLaw law = law::Normal{};
  Eigen::Index n = 100;
  Eigen::Index burn_in = 500;
  int trials = 200;
  double alpha = 0.05;
  MethodConfig method;
  RngStream seed{0, 0};
};

struct RunOptions {
  unsigned threads = 1;
  bool skip_failures = false;  ///< exclude failed trials instead of aborting
};

struct ScenarioResult {
  double rate = 0.0;  ///< rejections / trials_used
  int rejections = 0;
  int trials_used = 0;
  int failures = 0;
  double seconds_per_trial = 0.0;
  std::vector<TestOutcome> outcomes;  ///< by trial index; failed trials hold NaN
};

/// Trial j simulates from spec.seed.split(j); results do not depend on the thread count.
ScenarioResult run_scenario_detailed(const ScenarioSpec& spec, const RunOptions& options = {});
double run_scenario(const ScenarioSpec& spec, const RunOptions& options = {});

struct TableRow {
  std::string method;
  std::string law;
  double phi = 0.0;
  Eigen::Index n = 0;
  double rate = 0.0;
  int trials = 0;
  double seconds_per_trial = 0.0;
};

using RejectionTable = std::vector<TableRow>;

struct StudyOptions {
  std::vector<MethodConfig> methods;
  std::vector<Eigen::Index> ns{100, 250};
  std::vector<double> phis{-0.4, -0.25, 0.0, 0.25, 0.4};
  std::vector<InnovationLaw> laws{law::Normal{}, law::LogNormal{}, law::StudentT{3.0}, law::ChiSquared{10.0},
                                  law::Beta{7.0, 1.0}};
  int trials = 200;
  Eigen::Index burn_in = 500;
  double alpha = 0.05;
  RngStream seed{0, 0};
  RunOptions run;
  bool record_timing = false;  ///< otherwise seconds_per_trial is written as NA
};

/// Full grid method x law x phi x n. Rows are appended to `out` (CSV) as they finish.
RejectionTable reproduce_tables(const StudyOptions& options, const std::filesystem::path& out);

/// Asks running studies to stop after flushing finished rows (safe from a signal handler).
void request_stop();
void clear_stop();

/// Shortest round-trip decimal representation.
std::string format_shortest(double v);

}  // namespace norts
