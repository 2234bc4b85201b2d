#include "ineq/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ineq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 100000;

// Lower series: P(a, x) = x^a e^-x / Gamma(a+1) * sum_k x^k / ((a+1)...(a+k))
double lower_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper continued fraction (modified Lentz): Q(a, x) for x >= a + 1.
double upper_continued_fraction(double a, double x) {
  const double fpmin = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

GammaParams::GammaParams(double shape_, double rate_) : shape(shape_), rate(rate_) {
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw std::invalid_argument("GammaParams: shape must be positive, got " + std::to_string(shape_));
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::invalid_argument("GammaParams: rate must be positive, got " + std::to_string(rate_));
}

double regularized_lower_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("regularized_lower_incomplete_gamma: a must be positive");
  if (x < 0.0) throw std::domain_error("regularized_lower_incomplete_gamma: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return lower_series(a, x);
  return 1.0 - upper_continued_fraction(a, x);
}

double pdf(const GammaParams& p, double x) {
  if (x < 0.0) throw std::domain_error("gamma pdf: support is x >= 0");
  if (x == 0.0) {
    if (p.shape > 1.0) return 0.0;
    if (p.shape == 1.0) return p.rate;
    throw std::domain_error("gamma pdf: diverges at x = 0 for shape < 1");
  }
  return std::exp(p.shape * std::log(p.rate) + (p.shape - 1.0) * std::log(x) -
                  p.rate * x - std::lgamma(p.shape));
}

double cdf(const GammaParams& p, double x) {
  if (x < 0.0) throw std::domain_error("gamma cdf: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return regularized_lower_incomplete_gamma(p.shape, p.rate * x);
}

double quantile(const GammaParams& p, double q) {
  if (!(q > 0.0) || !(q < 1.0))
    throw std::domain_error("gamma quantile: q must lie in (0, 1), got " + std::to_string(q));

  // Bracket the root, expanding upward from the mean.
  double lo = 0.0;
  double hi = p.mean();
  while (cdf(p, hi) < q) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::runtime_error("gamma quantile: bracket expansion failed");
  }

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = cdf(p, x) - q;
    if (std::fabs(f) <= 1e-12) return x;
    if (f > 0.0)
      hi = x;
    else
      lo = x;

    const double dens = pdf(p, x);
    double next = (dens > 0.0) ? x - f / dens : 0.5 * (lo + hi);
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= kEps * hi) return 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

double bin_mass(const GammaParams& p, double lo, double hi) {
  if (lo < 0.0) throw std::domain_error("bin_mass: lo must be nonnegative");
  if (!(lo < hi)) throw std::domain_error("bin_mass: requires lo < hi");
  if (std::isinf(hi)) return 1.0 - cdf(p, lo);
  return cdf(p, hi) - cdf(p, lo);
}

double doodson_median(const GammaParams& p) {
  if (!(p.shape > 1.0 / 3.0))
    throw std::domain_error(
        "doodson_median: approximation requires shape > 1/3 (median estimate "
        "would be nonpositive)");
  return (3.0 * p.shape - 1.0) / (3.0 * p.rate);
}

}  // namespace ineq
