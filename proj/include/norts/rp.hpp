#pragma once

#include "norts/rng.hpp"
#include "norts/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace norts {

struct BetaPars {
  double a = 1.0;
  double b = 1.0;
};

struct ProjectionConfig {
  int k = 64;                       ///< even, >= 2
  BetaPars pars1{2.0, 7.0};
  BetaPars pars2{100.0, 1.0};
  RngStream seed{0, 0};
  double truncation_mass = 1.0 - 1e-9;
};

/// Unit-l2-norm, non-negative projection direction h_0..h_L.
struct ProjectionVector {
  Vector weights;
  Eigen::Index lags() const { return weights.size() - 1; }
};

struct ProjectionOutcome {
  std::string test;  ///< "lobato" or "epps"
  double statistic = 0.0;
  double p_value = 1.0;
  Eigen::Index lags = 0;
};

struct RpResult {
  int k = 0;
  double avg_lobato = 0.0;
  double avg_epps = 0.0;
  double p_value = 1.0;
  std::vector<ProjectionOutcome> per_projection;
};

inline constexpr Eigen::Index kStickBreakingHardCap = 10000;

/**
 * @brief Draws a projection direction from a stick-breaking process.
 *
 * v_j ~ Beta(a, b) i.i.d., w_0 = v_0, w_j = v_j prod_{i<j} (1 - v_i). Sticks are taken
 * until their cumulative mass reaches truncation_mass; then h_j = sqrt(w_j / sum w).
 * When max_lags is given the draw also stops after max_lags + 1 sticks (the
 * remaining mass is dropped before normalization). Reaching kStickBreakingHardCap
 * sticks without either stop throws NumericDegeneracy.
 */
ProjectionVector stick_breaking_h(double a, double b, RngStream& rng, double truncation_mass,
                                  std::optional<Eigen::Index> max_lags = std::nullopt);

/// Y_t = sum_{i=0}^{L} h_i X_{t-i} for t = L..n-1; output length n - L.
Series project_series(const Series& s, const ProjectionVector& h);

/// Benjamini-Yekutieli adjusted minimum: min(1, min_i p_(i) k c(k) / i), c(k) = sum 1/j.
double fdr_combine(const std::vector<double>& pvalues);

/// Random-projection test. Projections are capped at floor(n/2) lags so every projected
/// series keeps at least half of the sample. Projection i uses cfg.seed.split(i).
RpResult rp_test(const Series& s, const ProjectionConfig& cfg);

}  // namespace norts
