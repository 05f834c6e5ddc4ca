// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "fixtures.hpp"

#include "norts/distributions.hpp"
#include "norts/epps.hpp"
#include "norts/harness.hpp"
#include "norts/lobato.hpp"
#include "norts/rp.hpp"
#include "norts/simulate.hpp"
#include "norts/stationarity.hpp"
#include "norts/vavra.hpp"

#include <Eigen/Eigenvalues>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace norts;
namespace fs = std::filesystem;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

const RngStream kMaster(20240611);

unsigned worker_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

double rate(Method method, const InnovationLaw& law, double phi, Eigen::Index n, int m, std::uint64_t stream) {
  ScenarioSpec spec;
  spec.phi = phi;
  spec.law = law;
  spec.n = n;
  spec.trials = m;
  spec.method.method = method;
  spec.method.rp_k = 10;
  spec.method.vavra_replications = 300;
  spec.seed = kMaster.split(stream);
  return run_scenario(spec, RunOptions{worker_threads(), false});
}

template <std::size_t N>
Series as_series(const std::array<double, N>& values) {
  Vector v(static_cast<Eigen::Index>(N));
  for (std::size_t i = 0; i < N; ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return Series(v);
}

double relative(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// 1. Empirical size at the nominal 5% level.
Verdict size_under_null() {
  struct Row {
    Method method;
    double paper;
  };
  const std::vector<Row> rows = {{Method::Lobato, 0.056},
                                 {Method::Epps, 0.065},
                                 {Method::Vavra, 0.044},
                                 {Method::RandomProjections, 0.025}};
  Verdict v{true, ""};
  std::uint64_t stream = 100;
  for (const auto& row : rows) {
    const double r = rate(row.method, law::Normal{}, 0.0, 250, 500, stream++);
    bool ok = std::abs(r - row.paper) <= 0.03;
    if (row.method == Method::RandomProjections) ok = ok && r <= 0.06;
    v.pass = v.pass && ok;
    v.detail += method_label(row.method) + "=" + fmt("%.3f", r) + fmt(" (paper %.3f) ", row.paper);
  }
  return v;
}

// 2. Power against a log-normal marginal.
Verdict power_lognormal() {
  struct Row {
    Method method;
    double paper;
  };
  const std::vector<Row> rows = {{Method::Lobato, 1.0},
                                 {Method::Epps, 0.969},
                                 {Method::Vavra, 1.0},
                                 {Method::RandomProjections, 0.772}};
  Verdict v{true, ""};
  std::uint64_t stream = 200;
  for (const auto& row : rows) {
    const double r = rate(row.method, law::LogNormal{}, 0.0, 100, 200, stream++);
    v.pass = v.pass && r >= 0.95 * row.paper;
    v.detail += method_label(row.method) + "=" + fmt("%.3f", r) + fmt(" (need >= %.3f) ", 0.95 * row.paper);
  }
  return v;
}

// 3. Power grows with the sample size.
Verdict power_growth() {
  const double small = rate(Method::Epps, law::ChiSquared{10.0}, 0.0, 100, 200, 300);
  const double large = rate(Method::Epps, law::ChiSquared{10.0}, 0.0, 1000, 200, 301);
  return {large >= 0.95 && large - small >= 0.3,
          "epps chisq10 n=100 " + fmt("%.3f", small) + ", n=1000 " + fmt("%.3f", large)};
}

// 4. Serial dependence with heavy tails.
Verdict ar_dependence() {
  const double r = rate(Method::Lobato, law::StudentT{3.0}, -0.4, 500, 200, 400);
  return {std::abs(r - 0.968) <= 0.04, "lobato t3 phi=-0.4 n=500 rate " + fmt("%.3f", r) + " (target 0.968)"};
}

double ks_chi2_2(std::vector<double> stats) {
  std::sort(stats.begin(), stats.end());
  const double n = static_cast<double>(stats.size());
  double d = 0.0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const double f = chi2_cdf(stats[i], 2);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

// 5. Null distribution of the statistics.
Verdict chi2_calibration() {
  std::vector<double> lobato, epps;
  const RngStream root = kMaster.split(500);
  for (int j = 0; j < 500; ++j) {
    RngStream rng = root.split(static_cast<std::uint64_t>(j));
    const Series x = simulate_arma(ArmaSpec{}, 500, 0, rng);
    lobato.push_back(lobato_test(x).statistic);
    epps.push_back(epps_test(x).statistic);
  }
  const double d_lobato = ks_chi2_2(lobato), d_epps = ks_chi2_2(epps);
  return {d_lobato <= 0.08 && d_epps <= 0.08,
          "KS lobato " + fmt("%.4f", d_lobato) + ", epps " + fmt("%.4f", d_epps) + " (limit 0.08)"};
}

// 6. Location-scale invariance.
Verdict affine_invariance() {
  const std::vector<InnovationLaw> laws = {law::Normal{}, law::LogNormal{}, law::StudentT{3.0},
                                           law::ChiSquared{10.0}, law::Beta{7.0, 1.0}};
  RngStream rng = kMaster.split(600);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const InnovationLaw& law = laws[static_cast<std::size_t>(i) % laws.size()];
    const double phi = 0.8 * (2.0 * rng.uniform() - 1.0);
    const auto n = static_cast<Eigen::Index>(50 + 250 * rng.uniform());
    const Series x = simulate_arma(ArmaSpec{{phi}, {}, law}, n, 200, rng);
    const double magnitude = std::pow(10.0, 4.0 * rng.uniform() - 2.0);
    const double a = rng.uniform() < 0.5 ? -magnitude : magnitude;
    const double b = 200.0 * rng.uniform() - 100.0;
    const Series y((a * x.values().array() + b).matrix());
    worst = std::max({worst, relative(lobato_test(x).statistic, lobato_test(y).statistic),
                      relative(epps_test(x).statistic, epps_test(y).statistic),
                      relative(anderson_darling(x), anderson_darling(y))});
  }
  return {worst < 1e-6, "max relative change " + fmt("%.3g", worst) + " over 100 series"};
}

// Brute-force references for criterion 7, written without the library's helpers.
std::vector<double> raw_autocov(const Series& s) {
  const Eigen::Index n = s.size();
  double m = 0.0;
  for (Eigen::Index t = 0; t < n; ++t) m += s[t];
  m /= static_cast<double>(n);
  std::vector<double> g(static_cast<std::size_t>(n) + 1, 0.0);
  for (Eigen::Index h = 0; h < n; ++h) {
    double acc = 0.0;
    for (Eigen::Index t = h; t < n; ++t) acc += (s[t] - m) * (s[t - h] - m);
    g[static_cast<std::size_t>(h)] = acc / static_cast<double>(n);
  }
  return g;
}

double brute_fk(const Series& s, int k) {
  const auto g = raw_autocov(s);
  const Eigen::Index n = s.size();
  double total = 0.0;
  for (Eigen::Index t = 1 - n; t < n; ++t) {
    const auto a = static_cast<std::size_t>(std::abs(t));
    total += g[a] * std::pow(g[a] + g[static_cast<std::size_t>(n) - a], k - 1);
  }
  return total;
}

Vector brute_g_hat(const Series& s, const std::vector<double>& lambda) {
  Vector out = Vector::Zero(2 * static_cast<Eigen::Index>(lambda.size()));
  for (Eigen::Index t = 0; t < s.size(); ++t) {
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      out[2 * static_cast<Eigen::Index>(k)] += std::cos(lambda[k] * s[t]);
      out[2 * static_cast<Eigen::Index>(k) + 1] += std::sin(lambda[k] * s[t]);
    }
  }
  return out / static_cast<double>(s.size());
}

double brute_qn(const Series& s, double mu, double sigma2, const std::vector<double>& lambda) {
  const Eigen::Index n = s.size();
  const auto p = 2 * static_cast<Eigen::Index>(lambda.size());
  const Vector gbar = brute_g_hat(s, lambda);
  Matrix d(n, p);
  for (Eigen::Index t = 0; t < n; ++t) {
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      d(t, 2 * static_cast<Eigen::Index>(k)) = std::cos(lambda[k] * s[t]);
      d(t, 2 * static_cast<Eigen::Index>(k) + 1) = std::sin(lambda[k] * s[t]);
    }
    d.row(t) -= gbar.transpose();
  }
  const auto bandwidth = static_cast<Eigen::Index>(std::floor(std::pow(static_cast<double>(n), 0.4)));
  Matrix f = Matrix::Zero(p, p);
  for (Eigen::Index i = -bandwidth; i <= bandwidth; ++i) {
    const double w = 1.0 - static_cast<double>(std::abs(i)) / static_cast<double>(bandwidth);
    for (Eigen::Index t = std::max<Eigen::Index>(0, i); t < n && t - i < n; ++t) {
      f += w * d.row(t).transpose() * d.row(t - i);
    }
  }
  f /= static_cast<double>(n);
  f = 0.5 * (f + f.transpose());
  // Pseudoinverse through the symmetric eigendecomposition.
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(f);
  const Vector ev = eig.eigenvalues();
  const double cutoff = 1e-10 * ev.cwiseAbs().maxCoeff();
  Vector inv = Vector::Zero(p);
  for (Eigen::Index i = 0; i < p; ++i) inv[i] = std::abs(ev[i]) > cutoff ? 1.0 / ev[i] : 0.0;
  const Matrix pinv = eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();
  Vector diff = gbar;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const double modulus = std::exp(-0.5 * lambda[k] * lambda[k] * sigma2);
    diff[2 * static_cast<Eigen::Index>(k)] -= modulus * std::cos(lambda[k] * mu);
    diff[2 * static_cast<Eigen::Index>(k) + 1] -= modulus * std::sin(lambda[k] * mu);
  }
  return diff.dot(pinv * diff);
}

double quadrature_ad(const Series& s) {
  const auto g = raw_autocov(s);
  const Eigen::Index n = s.size();
  double m = 0.0;
  for (Eigen::Index t = 0; t < n; ++t) m += s[t];
  m /= static_cast<double>(n);
  std::vector<double> u{0.0};
  for (Eigen::Index t = 0; t < n; ++t) u.push_back(0.5 * std::erfc(-(s[t] - m) / std::sqrt(2.0 * g[0])));
  std::sort(u.begin() + 1, u.end());
  u.push_back(1.0);
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) {
    const double c = static_cast<double>(j) / static_cast<double>(n);
    const auto f = [c](double v) { return (v <= 0.0 || v >= 1.0) ? 0.0 : (c - v) * (c - v) / (v * (1.0 - v)); };
    const int steps = 4000;
    const double a = u[j], h = (u[j + 1] - u[j]) / steps;
    if (h == 0.0) continue;
    double acc = f(a) + f(u[j + 1]);
    for (int k = 1; k < steps; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    total += acc * h / 3.0;
  }
  return static_cast<double>(n) * total;
}

// 7. Core estimators against brute-force references.
Verdict oracle_equivalence() {
  const std::vector<Series> fixtures = {as_series(test::kFixture12), as_series(test::kFixture20),
                                        as_series(test::kFixture25), as_series(test::kFixture30)};
  const std::vector<double> lambda = {0.5, 1.0, 1.5};
  double fk_err = 0, ghat_err = 0, qn_err = 0, ad_err = 0, proj_err = 0;
  RngStream rng = kMaster.split(700);
  for (const auto& s : fixtures) {
    for (int k : {3, 4}) fk_err = std::max(fk_err, relative(fk_hat(s, k), brute_fk(s, k)));
    ghat_err = std::max(ghat_err, (g_hat(s, Lambda(lambda)) - brute_g_hat(s, lambda)).cwiseAbs().maxCoeff());
    const auto g = raw_autocov(s);
    const double mean = s.values().mean();
    for (auto [mu, s2] : {std::pair{mean, g[0]}, std::pair{0.0, 1.0}, std::pair{0.3, 2.0}}) {
      qn_err = std::max(qn_err, relative(qn(s, ThetaParams{mu, s2}, Lambda(lambda)), brute_qn(s, mu, s2, lambda)));
    }
    ad_err = std::max(ad_err, std::abs(anderson_darling(s) - quadrature_ad(s)));
    for (int rep = 0; rep < 5; ++rep) {
      const ProjectionVector h = stick_breaking_h(2.0, 7.0, rng, 1.0 - 1e-9, s.size() / 2);
      const Series y = project_series(s, h);
      for (Eigen::Index t = 0; t < y.size(); ++t) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i <= h.lags(); ++i) acc += h.weights[i] * s[t + h.lags() - i];
        proj_err = std::max(proj_err, std::abs(y[t] - acc));
      }
    }
  }
  const bool pass = fk_err < 1e-10 && ghat_err < 1e-12 && qn_err < 1e-8 && ad_err < 1e-6 && proj_err < 1e-12;
  return {pass, "fk " + fmt("%.2g", fk_err) + ", g_hat " + fmt("%.2g", ghat_err) + ", qn " + fmt("%.2g", qn_err) +
                    ", AD " + fmt("%.2g", ad_err) + ", projection " + fmt("%.2g", proj_err)};
}

struct Rational {
  long long num;
  long long den;
};

Rational reduce(long long num, long long den) {
  const long long g = std::gcd(num, den);
  return {num / g, den / g};
}

bool less(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

// 8. Benjamini-Yekutieli combination in exact arithmetic.
Verdict fdr_exact() {
  const std::vector<Rational> grid = {{1, 1000}, {1, 100}, {1, 20}, {1, 2}, {9, 10}};
  int checked = 0, mismatches = 0;
  double worst = 0.0;
  for (int len = 1; len <= 4; ++len) {
    int combos = 1;
    for (int i = 0; i < len; ++i) combos *= static_cast<int>(grid.size());
    for (int code = 0; code < combos; ++code) {
      std::vector<Rational> p;
      std::vector<double> pd;
      for (int i = 0, c = code; i < len; ++i, c /= static_cast<int>(grid.size())) {
        p.push_back(grid[static_cast<std::size_t>(c) % grid.size()]);
        pd.push_back(static_cast<double>(p.back().num) / static_cast<double>(p.back().den));
      }
      std::sort(p.begin(), p.end(), less);
      Rational harmonic{0, 1};
      for (int j = 1; j <= len; ++j) harmonic = reduce(harmonic.num * j + harmonic.den, harmonic.den * j);
      Rational best{1, 1};
      for (int i = 0; i < len; ++i) {
        const Rational candidate =
            reduce(p[static_cast<std::size_t>(i)].num * len * harmonic.num,
                   p[static_cast<std::size_t>(i)].den * harmonic.den * (i + 1));
        if (less(candidate, best)) best = candidate;
      }
      const double exact = static_cast<double>(best.num) / static_cast<double>(best.den);
      const double err = relative(fdr_combine(pd), exact);
      worst = std::max(worst, err);
      mismatches += err > 1e-14;
      ++checked;
    }
  }
  return {mismatches == 0, std::to_string(checked) + " vectors, max relative error " + fmt("%.2g", worst)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 9. CLI output does not depend on the worker count.
Verdict cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / "norts_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  for (int threads : {1, 4, 8}) {
    const fs::path out = dir / ("table_" + std::to_string(threads) + ".csv");
    const std::string cmd = std::string(NORTS_CLI_PATH) + " --seed 99 --threads " + std::to_string(threads) +
                            " --out " + out.string() +
                            " simulate --methods lobato,epps,rp,vavra --n 100 --phi 0,0.4 --laws N,logN --m 16"
                            " --reps 40 > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "simulate failed at threads=" + std::to_string(threads)};
    outputs.push_back(slurp(out));
  }
  fs::remove_all(dir);
  const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2] && !outputs[0].empty();
  return {same, std::string(same ? "identical" : "different") + " CSV at 1, 4, 8 threads (" +
                    std::to_string(outputs[0].size()) + " bytes)"};
}

// 10. Unit-root and level-stationarity tests on white noise and random walks.
Verdict stationarity_pretests() {
  const RngStream root = kMaster.split(1000);
  int adf_noise = 0, adf_walk = 0, kpss_noise = 0, kpss_walk = 0;
  const int trials = 200;
  const Eigen::Index n = 500;
  for (int j = 0; j < trials; ++j) {
    RngStream rng = root.split(static_cast<std::uint64_t>(j));
    const Series noise = simulate_arma(ArmaSpec{}, n, 0, rng);
    Vector walk(n);
    double acc = 0.0;
    for (Eigen::Index t = 0; t < n; ++t) walk[t] = (acc += sample_normal(rng));
    const Series rw(walk);
    const auto a0 = adf_test(noise);
    adf_noise += a0.conclusion == Conclusion::Stationary && a0.bounded && a0.p_value == 0.01;
    adf_walk += adf_test(rw).conclusion == Conclusion::NonStationary;
    kpss_noise += kpss_test(noise).conclusion == Conclusion::Stationary;
    kpss_walk += kpss_test(rw).conclusion == Conclusion::NonStationary;
  }
  const double limit = 0.9 * trials;
  const bool pass = adf_noise >= limit && adf_walk >= limit && kpss_noise >= limit && kpss_walk >= limit;
  return {pass, "ADF noise clamped-reject " + std::to_string(adf_noise) + "/200, walk keep " + std::to_string(adf_walk) +
                    "/200; KPSS noise keep " + std::to_string(kpss_noise) + "/200, walk reject " +
                    std::to_string(kpss_walk) + "/200"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"size under the null", size_under_null},
      {"power against log-normal", power_lognormal},
      {"power growth with n", power_growth},
      {"AR dependence robustness", ar_dependence},
      {"chi-squared null calibration", chi2_calibration},
      {"affine invariance", affine_invariance},
      {"oracle equivalence", oracle_equivalence},
      {"FDR exact arithmetic", fdr_exact},
      {"CLI determinism", cli_determinism},
      {"stationarity pre-tests", stationarity_pretests},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::printf("%s criterion %zu (%s): %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
