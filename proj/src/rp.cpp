#include "norts/rp.hpp"

#include "norts/distributions.hpp"
#include "norts/epps.hpp"
#include "norts/lobato.hpp"

#include <algorithm>
#include <cmath>

namespace norts {

ProjectionVector stick_breaking_h(double a, double b, RngStream& rng, double truncation_mass,
                                  std::optional<Eigen::Index> max_lags) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidInput("stick_breaking_h: beta parameters must be positive");
  if (!(truncation_mass > 0.0 && truncation_mass < 1.0)) {
    throw InvalidInput("stick_breaking_h: truncation mass must lie in (0, 1)");
  }
  if (max_lags && *max_lags < 0) throw InvalidInput("stick_breaking_h: max_lags must be non-negative");

  std::vector<double> sticks;
  double remaining = 1.0;
  double taken = 0.0;
  while (true) {
    if (static_cast<Eigen::Index>(sticks.size()) >= kStickBreakingHardCap) {
      throw NumericDegeneracy("stick_breaking_h: no truncation after 10000 sticks");
    }
    const double v = sample_beta(a, b, rng);
    const double w = v * remaining;
    sticks.push_back(w);
    taken += w;
    remaining *= (1.0 - v);
    if (taken >= truncation_mass || remaining <= 0.0) break;
    if (max_lags && static_cast<Eigen::Index>(sticks.size()) > *max_lags) break;
  }

  ProjectionVector h;
  h.weights.resize(static_cast<Eigen::Index>(sticks.size()));
  for (Eigen::Index j = 0; j < h.weights.size(); ++j) h.weights[j] = std::sqrt(sticks[j] / taken);
  h.weights /= h.weights.norm();
  return h;
}

Series project_series(const Series& s, const ProjectionVector& h) {
  const Eigen::Index n = s.size();
  const Eigen::Index lags = h.lags();
  if (h.weights.size() == 0) throw InvalidInput("project_series: empty projection vector");
  if (n <= lags) {
    throw InvalidInput("project_series: series of length " + std::to_string(n) + " is shorter than " +
                       std::to_string(lags + 1) + " projection weights");
  }
  Vector y(n - lags);
  for (Eigen::Index t = lags; t < n; ++t) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i <= lags; ++i) acc += h.weights[i] * s[t - i];
    y[t - lags] = acc;
  }
  return Series(std::move(y), s.period());
}

double fdr_combine(const std::vector<double>& pvalues) {
  if (pvalues.empty()) throw InvalidInput("fdr_combine: no p-values");
  for (double p : pvalues) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("fdr_combine: p-values must lie in [0, 1]");
  }
  std::vector<double> sorted = pvalues;
  std::sort(sorted.begin(), sorted.end());
  const auto k = static_cast<double>(sorted.size());
  double harmonic = 0.0;
  for (std::size_t j = 1; j <= sorted.size(); ++j) harmonic += 1.0 / static_cast<double>(j);
  double best = 1.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    best = std::min(best, sorted[i] * k * harmonic / static_cast<double>(i + 1));
  }
  return best;
}

RpResult rp_test(const Series& s, const ProjectionConfig& cfg) {
  if (cfg.k < 2 || cfg.k % 2 != 0) throw InvalidInput("rp: k must be an even integer >= 2");
  require_length(s, 20, "rp");
  if (!(sample_autocov(s, 0) > 0.0)) throw InvalidInput("rp: zero variance");

  const Eigen::Index max_lags = s.size() / 2;
  const int half = cfg.k / 2;

  RpResult out;
  out.k = cfg.k;
  out.per_projection.reserve(static_cast<std::size_t>(cfg.k));
  std::vector<double> pvalues;
  double lobato_sum = 0.0;
  double epps_sum = 0.0;
  int lobato_count = 0;
  int epps_count = 0;

  for (int index = 0; index < cfg.k; ++index) {
    const BetaPars& pars = index < half ? cfg.pars1 : cfg.pars2;
    const int position = (index % half) + 1;  // 1-based within its half
    RngStream stream = cfg.seed.split(static_cast<std::uint64_t>(index));
    ProjectionOutcome outcome;
    try {
      const auto h = stick_breaking_h(pars.a, pars.b, stream, cfg.truncation_mass, max_lags);
      const Series y = project_series(s, h);
      outcome.lags = h.lags();
      if (position % 2 == 1) {
        const auto r = lobato_test(y);
        outcome.test = "lobato";
        outcome.statistic = r.statistic;
        outcome.p_value = r.p_value;
        lobato_sum += r.statistic;
        ++lobato_count;
      } else {
        const auto r = epps_test(y);
        outcome.test = "epps";
        outcome.statistic = r.statistic;
        outcome.p_value = r.p_value;
        epps_sum += r.statistic;
        ++epps_count;
      }
    } catch (const InvalidInput& e) {
      throw InvalidInput("rp projection " + std::to_string(index + 1) + ": " + e.what());
    } catch (const NumericDegeneracy& e) {
      throw NumericDegeneracy("rp projection " + std::to_string(index + 1) + ": " + e.what());
    }
    pvalues.push_back(outcome.p_value);
    out.per_projection.push_back(outcome);
  }

  out.avg_lobato = lobato_count ? lobato_sum / lobato_count : 0.0;
  out.avg_epps = epps_count ? epps_sum / epps_count : 0.0;
  out.p_value = fdr_combine(pvalues);
  return out;
}

}  // namespace norts
