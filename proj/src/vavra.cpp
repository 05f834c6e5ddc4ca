#include "norts/vavra.hpp"

#include "norts/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace norts {

double anderson_darling_statistic(const Vector& x) {
  const Eigen::Index n = x.size();
  if (n == 0) throw InvalidInput("anderson_darling: empty series");
  const double mu = sample_mean(x);
  const double var = sample_autocov(x, 0);
  if (!(var > 0.0)) throw InvalidInput("anderson_darling: zero variance");
  const double sd = std::sqrt(var);
  std::vector<double> z(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = (x[i] - mu) / sd;
  std::sort(z.begin(), z.end());

  double acc = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double weight = 2.0 * static_cast<double>(i) + 1.0;
    acc += weight * (normal_logcdf(z[i]) + normal_logsf(z[z.size() - 1 - i]));
  }
  const double nn = static_cast<double>(n);
  return std::max(0.0, -nn - acc / nn);
}

double anderson_darling(const Series& s) {
  require_length(s, 10, "anderson_darling");
  return anderson_darling_statistic(s.values());
}

int default_sieve_order(Eigen::Index n) {
  if (n < 1) return 0;
  return static_cast<int>(std::floor(10.0 * std::log10(static_cast<double>(n))));
}

ArSieveFit fit_ar_sieve(const Series& s, int max_order) {
  const Eigen::Index n = s.size();
  if (max_order < 0) throw InvalidInput("fit_ar_sieve: max_order must be non-negative");
  if (n <= 2 * static_cast<Eigen::Index>(max_order) || n < 2) {
    throw InvalidInput("fit_ar_sieve: need n > 2 * max_order");
  }
  const Vector acv = sample_autocov_all(s, max_order);
  if (!(acv[0] > 0.0)) throw NumericDegeneracy("fit_ar_sieve: zero variance");

  // Levinson-Durbin recursion through all orders, tracking AIC.
  const double nn = static_cast<double>(n);
  Vector phi = Vector::Zero(max_order);
  Vector prev = Vector::Zero(max_order);
  double sigma2 = acv[0];
  int best_order = 0;
  double best_aic = nn * std::log(sigma2);
  Vector best_phi;
  for (int p = 1; p <= max_order; ++p) {
    double num = acv[p];
    for (int j = 1; j < p; ++j) num -= prev[j - 1] * acv[p - j];
    const double reflection = num / sigma2;
    if (!(std::abs(reflection) < 1.0)) throw NumericDegeneracy("fit_ar_sieve: non-invertible Toeplitz system");
    phi[p - 1] = reflection;
    for (int j = 1; j < p; ++j) phi[j - 1] = prev[j - 1] - reflection * prev[p - j - 1];
    sigma2 *= (1.0 - reflection * reflection);
    if (!(sigma2 > 0.0)) throw NumericDegeneracy("fit_ar_sieve: non-positive innovation variance");
    prev = phi;
    const double aic = nn * std::log(sigma2) + 2.0 * p;
    if (aic < best_aic) {
      best_aic = aic;
      best_order = p;
      best_phi = phi.head(p);
    }
  }

  ArSieveFit fit;
  fit.order = best_order;
  fit.coefficients = best_order > 0 ? best_phi : Vector();
  fit.mean = sample_mean(s);
  const Vector centered = s.values().array() - fit.mean;
  fit.residuals.resize(n - best_order);
  for (Eigen::Index t = best_order; t < n; ++t) {
    double e = centered[t];
    for (int i = 1; i <= best_order; ++i) e -= fit.coefficients[i - 1] * centered[t - i];
    fit.residuals[t - best_order] = e;
  }
  fit.residuals.array() -= fit.residuals.mean();
  fit.innovation_variance = fit.residuals.squaredNorm() / static_cast<double>(fit.residuals.size());
  return fit;
}

namespace {

struct ReplicateOutcome {
  double statistic = 0.0;
  bool ok = false;
};

ReplicateOutcome run_replicate(const ArSieveFit& fit, Eigen::Index n, const SieveConfig& cfg, RngStream rng) {
  const int p = fit.order;
  const Eigen::Index total = cfg.burn_in + n;
  const double sd = std::sqrt(fit.innovation_variance);
  const auto m = static_cast<std::uint64_t>(fit.residuals.size());
  Vector x(total);
  for (int attempt = 0; attempt < 10; ++attempt) {
    for (Eigen::Index t = 0; t < total; ++t) {
      double e;
      if (cfg.innovations == BootstrapInnovations::Gaussian) {
        e = sd * sample_normal(rng);
      } else {
        e = fit.residuals[static_cast<Eigen::Index>(rng.next_u64() % m)];
      }
      for (int i = 1; i <= p && i <= t; ++i) e += fit.coefficients[i - 1] * x[t - i];
      x[t] = e;
    }
    const Vector tail = x.tail(n);
    if (sample_autocov(tail, 0) > 0.0) return {anderson_darling_statistic(tail), true};
  }
  return {};
}

}  // namespace

VavraResult vavra_test(const Series& s, const SieveConfig& cfg) {
  require_length(s, 10, "vavra");
  if (cfg.replications < 1) throw InvalidInput("vavra: replications must be positive");
  if (cfg.burn_in < 0) throw InvalidInput("vavra: burn_in must be non-negative");
  if (cfg.replications < 100) warn("vavra: fewer than 100 bootstrap replications; p-value is coarse");
  if (!(sample_autocov(s, 0) > 0.0)) throw InvalidInput("vavra: zero variance");

  const Eigen::Index n = s.size();
  int max_order = cfg.max_order.value_or(default_sieve_order(n));
  max_order = std::min<int>(max_order, static_cast<int>((n - 1) / 2));
  const ArSieveFit fit = fit_ar_sieve(s, max_order);
  const double observed = anderson_darling(s);

  std::vector<ReplicateOutcome> outcomes(static_cast<std::size_t>(cfg.replications));
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t r = begin; r < outcomes.size(); r += stride) {
      outcomes[r] = run_replicate(fit, n, cfg, cfg.seed.split(r));
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(outcomes.size())));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  VavraResult out;
  out.ad_observed = observed;
  out.ar_order = fit.order;
  int exceed = 0;
  double sum = 0.0;
  for (const auto& o : outcomes) {
    if (!o.ok) continue;
    ++out.replications_used;
    sum += o.statistic;
    if (o.statistic >= observed) ++exceed;
  }
  if (out.replications_used == 0) throw NumericDegeneracy("vavra: every bootstrap replicate was degenerate");
  out.ad_bootstrap_mean = sum / out.replications_used;
  out.p_value = (1.0 + exceed) / (1.0 + out.replications_used);
  return out;
}

}  // namespace norts
