// norts: normality tests for stationary time series.
//
//   norts test --method {epps|lobato|rp|vavra|adf|kpss|lb} FILE.csv
//   norts simulate --methods lobato,epps,rp,vavra --n 100,250 --m 200 --seed S --out table.csv
//   norts check FILE.csv [--unit-root adf] [--normality rp] [--plot-data --out DIR]
//
// Exit codes: 0 ran, 2 usage error, 3 invalid input data, 4 numeric degeneracy.

#include "norts/check.hpp"
#include "norts/csv.hpp"
#include "norts/harness.hpp"
#include "norts/report.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitNumeric = 4;

std::vector<double> parse_list(const std::string& text, const std::string& option) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw norts::UsageError(option + ": '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw norts::UsageError(option + ": empty list");
  return out;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Law lists contain commas inside parentheses ("beta(7,1)"), so split on top-level commas only.
std::vector<std::string> split_laws(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

norts::BetaPars parse_pars(const std::string& text, const std::string& option) {
  const auto v = parse_list(text, option);
  if (v.size() != 2 || !(v[0] > 0.0) || !(v[1] > 0.0)) {
    throw norts::UsageError(option + ": expected two positive numbers a,b");
  }
  return {v[0], v[1]};
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void on_interrupt(int) { norts::request_stop(); }

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  double alpha = 0.05;
  std::string format = "text";
  std::string out;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

struct MethodKnobs {
  std::string lambda;
  int k = 64;
  std::string pars1 = "2,7";
  std::string pars2 = "100,1";
  int reps = 1000;
  std::string bootstrap = "gaussian";
  int lags = 10;

  void apply(norts::DispatchOptions& o) const {
    if (!lambda.empty()) o.lambda = parse_list(lambda, "--lambda");
    o.rp_k = k;
    o.rp_pars1 = parse_pars(pars1, "--pars1");
    o.rp_pars2 = parse_pars(pars2, "--pars2");
    o.vavra_replications = reps;
    if (bootstrap == "gaussian") {
      o.vavra_innovations = norts::BootstrapInnovations::Gaussian;
    } else if (bootstrap == "residuals") {
      o.vavra_innovations = norts::BootstrapInnovations::Residuals;
    } else {
      throw norts::UsageError("--bootstrap must be 'gaussian' or 'residuals'");
    }
    o.lb_lags = lags;
  }
};

void add_knobs(CLI::App* cmd, MethodKnobs& knobs) {
  cmd->add_option("--lambda", knobs.lambda, "Epps evaluation points v1,v2,... (default (1,2)/sd)");
  cmd->add_option("--k", knobs.k, "number of random projections (even)");
  cmd->add_option("--pars1", knobs.pars1, "beta parameters a,b of the first projection half");
  cmd->add_option("--pars2", knobs.pars2, "beta parameters a,b of the second projection half");
  cmd->add_option("--reps", knobs.reps, "sieve-bootstrap replications");
  cmd->add_option("--bootstrap", knobs.bootstrap, "bootstrap innovations: gaussian | residuals");
  cmd->add_option("--lags", knobs.lags, "Ljung-Box lags");
}

void write_text(const std::string& body, const std::string& dir, const std::string& name) {
  std::cout << body;
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  out << body;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

int run(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit tests for normality of stationary time series"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed (entropy-seeded and echoed when omitted)");
  app.add_option("--alpha", global.alpha, "significance level");
  app.add_option("--format", global.format, "output format: text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", global.out, "output path (simulate: CSV file; check/test: directory)");
  app.add_option("--threads", global.threads, "worker threads");

  // test
  auto* test = app.add_subcommand("test", "run one test on a CSV series");
  test->fallthrough();
  std::string method;
  std::string test_file;
  bool no_pretest = false;
  MethodKnobs test_knobs;
  test->add_option("--method", method, "epps | lobato | rp | vavra | adf | kpss | lb")->required();
  test->add_option("file", test_file, "CSV file with one numeric column")->required();
  test->add_flag("--no-pretest", no_pretest, "skip the ADF stationarity pre-test");
  add_knobs(test, test_knobs);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo rejection-rate study over AR(1) processes");
  simulate->fallthrough();
  std::string methods = "lobato,epps,rp,vavra";
  std::string ns = "100,250";
  std::string phis = "-0.4,-0.25,0,0.25,0.4";
  std::string laws = "N,logN,t3,chisq10,beta(7,1)";
  int trials = 200;
  int burn_in = 500;
  int sim_k = 10;
  int sim_reps = 300;
  bool skip_failures = false;
  bool timing = false;
  simulate->add_option("--methods", methods, "comma-separated methods");
  simulate->add_option("--n", ns, "comma-separated sample sizes");
  simulate->add_option("--phi", phis, "comma-separated AR(1) coefficients");
  simulate->add_option("--laws", laws, "comma-separated innovation laws");
  simulate->add_option("--m", trials, "trials per scenario");
  simulate->add_option("--burn-in", burn_in, "discarded start-up observations");
  simulate->add_option("--k", sim_k, "projections for rp");
  simulate->add_option("--reps", sim_reps, "bootstrap replications for vavra");
  simulate->add_flag("--skip-failures", skip_failures, "exclude failed trials instead of aborting");
  simulate->add_flag("--timing", timing, "record seconds_per_trial (makes the CSV non-reproducible)");

  // check
  auto* check_cmd = app.add_subcommand("check", "stationarity and normality report for residuals");
  check_cmd->fallthrough();
  std::string check_file;
  std::string unit_root = "adf";
  std::string normality = "rp";
  bool plot_data = false;
  int period = 1;
  MethodKnobs check_knobs;
  check_cmd->add_option("file", check_file, "CSV file with residuals")->required();
  check_cmd->add_option("--unit-root", unit_root, "adf | kpss | lb");
  check_cmd->add_option("--normality", normality, "epps | lobato | rp | vavra");
  check_cmd->add_flag("--plot-data", plot_data, "write residuals/hist/qq/acf CSVs into --out");
  check_cmd->add_option("--period", period, "observations per seasonal cycle");
  add_knobs(check_cmd, check_knobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool json = global.format == "json";

  if (*test) {
    norts::DispatchOptions options;
    test_knobs.apply(options);
    options.alpha = global.alpha;
    options.seed = global.seed;
    options.threads = global.threads;
    options.stationarity_pretest = !no_pretest;
    const norts::Series s = norts::read_series_csv(test_file);
    const auto report = norts::test_dispatch(method, s, options);
    if (json) {
      write_text(norts::render_json(report) + "\n", global.out, "report.json");
    } else {
      write_text(norts::render_text(report), global.out, "report.txt");
    }
    return 0;
  }

  if (*simulate) {
    norts::StudyOptions study;
    for (const auto& m : split_words(methods)) {
      norts::MethodConfig config;
      config.method = norts::parse_method(m);
      config.rp_k = sim_k;
      config.vavra_replications = sim_reps;
      study.methods.push_back(config);
    }
    study.ns.clear();
    for (double n : parse_list(ns, "--n")) {
      if (!(n >= 10) || n != std::floor(n)) throw norts::UsageError("--n: sample sizes must be integers >= 10");
      study.ns.push_back(static_cast<Eigen::Index>(n));
    }
    study.phis = parse_list(phis, "--phi");
    study.laws.clear();
    for (const auto& l : split_laws(laws)) study.laws.push_back(norts::parse_law(l));
    if (trials < 1) throw norts::UsageError("--m must be positive");
    if (burn_in < 0) throw norts::UsageError("--burn-in must be non-negative");
    study.trials = trials;
    study.burn_in = burn_in;
    study.alpha = global.alpha;
    const std::uint64_t seed = global.seed ? *global.seed : entropy_seed();
    if (!global.seed) std::cerr << "seed: " << seed << "\n";
    study.seed = norts::RngStream(seed);
    study.run.threads = global.threads;
    study.run.skip_failures = skip_failures;
    study.record_timing = timing;
    const std::string out = global.out.empty() ? "table.csv" : global.out;
    std::signal(SIGINT, on_interrupt);
    const auto table = norts::reproduce_tables(study, out);
    std::cerr << "wrote " << table.size() << " rows to " << out << "\n";
    return 0;
  }

  norts::CheckConfig cfg;
  cfg.unit_root = unit_root;
  cfg.normality = normality;
  cfg.alpha = global.alpha;
  cfg.seed = global.seed;
  cfg.emit_plot_data = plot_data;
  cfg.plot_dir = global.out.empty() ? std::filesystem::path(".") : std::filesystem::path(global.out);
  check_knobs.apply(cfg.test_options);
  cfg.test_options.threads = global.threads;
  const norts::Series s = norts::read_series_csv(check_file, period);
  const auto report = norts::check(s, cfg);
  std::cout << (json ? norts::render_json(report) + "\n" : report.text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const norts::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const norts::NumericDegeneracy& e) {
    std::cerr << "numeric degeneracy: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
