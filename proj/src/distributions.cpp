#include "norts/distributions.hpp"

#include "norts/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace norts {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// log of the upper tail Q(t) for t >= 10 via the Laplace continued fraction
// Q(t) = phi(t) / (t + 1/(t + 2/(t + 3/(t + ...)))).
double log_upper_tail_cf(double t) {
  double cf = t;
  for (int k = 120; k >= 1; --k) cf = t + k / cf;
  return -0.5 * t * t - kLogSqrt2Pi - std::log(cf);
}

// Acklam's rational approximation, relative error ~1.2e-9 before refinement.
double acklam_quantile(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Series representation of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

double normal_pdf(double x) { return std::exp(-0.5 * x * x - kLogSqrt2Pi); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_logcdf(double x) {
  if (x < -10.0) return log_upper_tail_cf(-x);
  if (x > 5.0) return std::log1p(-0.5 * std::erfc(x * kInvSqrt2));
  return std::log(normal_cdf(x));
}

double normal_logsf(double x) { return normal_logcdf(-x); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw InvalidInput("normal_quantile: p must lie in [0, 1]");
  }
  double x = acklam_quantile(p);
  // One Halley step against the erfc-based CDF. Work in the tail that keeps p exact.
  const double e = (p < 0.5) ? normal_cdf(x) - p : (1.0 - p) - normal_cdf(-x);
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x = x - u / (1.0 + 0.5 * x * u);
  return x;
}

double gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw InvalidInput("gamma_p: require a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw InvalidInput("gamma_q: require a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double gamma_p_inverse(double a, double p) {
  if (!(a > 0.0)) throw InvalidInput("gamma_p_inverse: shape must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("gamma_p_inverse: p must lie in [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return std::numeric_limits<double>::infinity();

  const bool upper = p > 0.5;
  const double q = 1.0 - p;  // exact for p > 0.5
  const double lg = std::lgamma(a);

  // Starting point.
  double x;
  if (a > 1.0) {
    const double z = normal_quantile(p);
    const double s = 1.0 / (9.0 * a);
    x = a * std::pow(1.0 - s + z * std::sqrt(s), 3);
    if (!(x > 0.0)) x = std::exp((std::log(p) + std::lgamma(a + 1.0)) / a);
  } else {
    const double t = 1.0 - a * (0.253 + a * 0.12);
    x = (p < t) ? std::pow(p / t, 1.0 / a) : 1.0 - std::log1p(-(p - t) / (1.0 - t));
  }
  if (!(x > 0.0) || !std::isfinite(x)) x = a;

  // Safeguarded Newton: maintain a bracket [lo, hi] on the root.
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 200; ++iter) {
    const double f = upper ? q - gamma_q(a, x) : gamma_p(a, x) - p;
    if (f == 0.0) return x;
    if (f > 0.0) {
      hi = std::min(hi, x);
    } else {
      lo = std::max(lo, x);
    }
    const double density = std::exp(-x + (a - 1.0) * std::log(x) - lg);
    double next = (density > 0.0) ? x - f / density : std::numeric_limits<double>::quiet_NaN();
    if (!(next > lo && next < hi)) {
      next = std::isfinite(hi) ? 0.5 * (lo + hi) : std::max(2.0 * x, lo + 1.0);
    }
    if (std::abs(next - x) <= 1e-12 * std::abs(next)) return next;
    x = next;
  }
  return x;
}

double chi2_sf(double x, int df) {
  if (df <= 0) throw InvalidInput("chi2_sf: df must be positive");
  if (!(x >= 0.0)) throw InvalidInput("chi2_sf: x must be non-negative");
  if (df == 2) return std::exp(-0.5 * x);
  return gamma_q(0.5 * df, 0.5 * x);
}

double chi2_cdf(double x, int df) {
  if (df <= 0) throw InvalidInput("chi2_cdf: df must be positive");
  if (!(x >= 0.0)) throw InvalidInput("chi2_cdf: x must be non-negative");
  if (df == 2) return -std::expm1(-0.5 * x);
  return gamma_p(0.5 * df, 0.5 * x);
}

void validate(const InnovationLaw& law) {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidSpec(std::string(what) + " must be positive");
  };
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, law::LogNormal>) {
          positive(l.sdlog, "log-normal sdlog");
        } else if constexpr (std::is_same_v<T, law::StudentT>) {
          positive(l.df, "Student t df");
        } else if constexpr (std::is_same_v<T, law::ChiSquared>) {
          positive(l.df, "chi-squared df");
        } else if constexpr (std::is_same_v<T, law::Beta>) {
          positive(l.a, "beta a");
          positive(l.b, "beta b");
        } else if constexpr (std::is_same_v<T, law::Gamma>) {
          positive(l.rate, "gamma rate");
          positive(l.shape, "gamma shape");
        }
      },
      law);
}

std::string label(const InnovationLaw& law) {
  return std::visit(
      [](const auto& l) -> std::string {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, law::Normal>) {
          return "N";
        } else if constexpr (std::is_same_v<T, law::LogNormal>) {
          if (l.meanlog == 0.0 && l.sdlog == 1.0) return "logN";
          return "logN(" + format_number(l.meanlog) + "," + format_number(l.sdlog) + ")";
        } else if constexpr (std::is_same_v<T, law::StudentT>) {
          return "t" + format_number(l.df);
        } else if constexpr (std::is_same_v<T, law::ChiSquared>) {
          return "chisq" + format_number(l.df);
        } else if constexpr (std::is_same_v<T, law::Beta>) {
          return "beta(" + format_number(l.a) + "," + format_number(l.b) + ")";
        } else {
          return "gamma(" + format_number(l.rate) + "," + format_number(l.shape) + ")";
        }
      },
      law);
}

namespace {

double parse_positive(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw InvalidInput("unrecognized law: " + whole);
  return v;
}

std::pair<double, double> parse_pair(const std::string& inner, const std::string& whole) {
  const auto comma = inner.find(',');
  if (comma == std::string::npos) throw InvalidInput("unrecognized law: " + whole);
  return {parse_positive(inner.substr(0, comma), whole), parse_positive(inner.substr(comma + 1), whole)};
}

}  // namespace

InnovationLaw parse_law(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  auto strip_parens = [&](const std::string& body) {
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') return body.substr(1, body.size() - 2);
    return body;
  };
  InnovationLaw out;
  if (t == "n" || t == "normal") {
    out = law::Normal{};
  } else if (t == "logn" || t == "lognormal") {
    out = law::LogNormal{};
  } else if (t.rfind("logn(", 0) == 0) {
    const auto [m, s] = parse_pair(strip_parens(t.substr(4)), text);
    out = law::LogNormal{m, s};
  } else if (t.rfind("chisq", 0) == 0) {
    out = law::ChiSquared{parse_positive(strip_parens(t.substr(5)), text)};
  } else if (t.rfind("beta", 0) == 0) {
    const auto [a, b] = parse_pair(strip_parens(t.substr(4)), text);
    out = law::Beta{a, b};
  } else if (t.rfind("gamma", 0) == 0) {
    const auto [rate, shape] = parse_pair(strip_parens(t.substr(5)), text);
    out = law::Gamma{rate, shape};
  } else if (t.rfind("t", 0) == 0 && t.size() > 1) {
    out = law::StudentT{parse_positive(strip_parens(t.substr(1)), text)};
  } else {
    throw InvalidInput("unrecognized law: " + text);
  }
  validate(out);
  return out;
}

double sample_normal(RngStream& rng) { return normal_quantile(rng.uniform()); }

double sample_gamma(double shape, RngStream& rng) { return gamma_p_inverse(shape, rng.uniform()); }

double sample_beta(double a, double b, RngStream& rng) {
  const double x = sample_gamma(a, rng);
  const double y = sample_gamma(b, rng);
  // Keep the draw inside the open support when one gamma underflows relative to the other.
  constexpr double lo = std::numeric_limits<double>::min();
  constexpr double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  return std::clamp(x / (x + y), lo, hi);
}

double sample(const InnovationLaw& law, RngStream& rng) {
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, law::Normal>) {
          return sample_normal(rng);
        } else if constexpr (std::is_same_v<T, law::LogNormal>) {
          return std::exp(l.meanlog + l.sdlog * sample_normal(rng));
        } else if constexpr (std::is_same_v<T, law::StudentT>) {
          const double z = sample_normal(rng);
          const double chi2 = 2.0 * sample_gamma(0.5 * l.df, rng);
          return z / std::sqrt(chi2 / l.df);
        } else if constexpr (std::is_same_v<T, law::ChiSquared>) {
          return 2.0 * sample_gamma(0.5 * l.df, rng);
        } else if constexpr (std::is_same_v<T, law::Beta>) {
          return sample_beta(l.a, l.b, rng);
        } else {
          return sample_gamma(l.shape, rng) / l.rate;
        }
      },
      law);
}

}  // namespace norts
