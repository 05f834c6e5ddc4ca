#pragma once

#include "norts/rng.hpp"

#include <string>
#include <variant>

namespace norts {

// Normal distribution. Absolute error of normal_cdf is at the level of std::erfc.
double normal_pdf(double x);
double normal_cdf(double x);
/// log Phi(x), finite for all finite x.
double normal_logcdf(double x);
/// log(1 - Phi(x)), finite for all finite x.
double normal_logsf(double x);
/// Phi^{-1}(p) for p in (0, 1); refined to full double precision.
double normal_quantile(double p);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);
/// Inverse of P(a, .) by safeguarded Newton iteration (relative tolerance 1e-12).
double gamma_p_inverse(double a, double p);

/// Upper tail of chi-squared(df) at x. Exactly exp(-x/2) for df = 2.
double chi2_sf(double x, int df);
double chi2_cdf(double x, int df);

namespace law {
struct Normal {};
struct LogNormal {
  double meanlog = 0.0;
  double sdlog = 1.0;
};
struct StudentT {
  double df;
};
struct ChiSquared {
  double df;
};
struct Beta {
  double a;
  double b;
};
struct Gamma {
  double rate;
  double shape;
};
}  // namespace law

/// Innovation distribution for the simulators.
using InnovationLaw =
    std::variant<law::Normal, law::LogNormal, law::StudentT, law::ChiSquared, law::Beta, law::Gamma>;

/// Throws InvalidSpec when a parameter that must be positive is not.
void validate(const InnovationLaw& law);

/// Short label: "N", "logN", "t3", "chisq10", "beta(7,1)", "gamma(3,6)".
std::string label(const InnovationLaw& law);

/// Parses the labels produced by label(), plus "normal", "lognormal", "t(3)", "chisq(10)".
InnovationLaw parse_law(const std::string& text);

// Samplers. All built on inverse-CDF transforms of rng.uniform().
double sample_normal(RngStream& rng);
double sample_gamma(double shape, RngStream& rng);  // unit rate
double sample_beta(double a, double b, RngStream& rng);
double sample(const InnovationLaw& law, RngStream& rng);

}  // namespace norts
