#include "ineq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ineq::stats {

double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty input");
  return compensated_sum(xs) / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance: needs at least 2 values");
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / static_cast<double>(xs.size() - 1);
}

std::vector<double> standardize(std::span<const double> xs) {
  const double m = mean(xs);
  const double sd = std::sqrt(variance(xs));
  if (!(sd > 0.0)) throw std::domain_error("standardize: series is constant");
  std::vector<double> z(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) z[i] = (xs[i] - m) / sd;
  return z;
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("pearson_correlation: need equal lengths >= 2");
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (!(saa > 0.0) || !(sbb > 0.0))
    throw std::domain_error("pearson_correlation: constant series");
  return sab / std::sqrt(saa * sbb);
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

GammaParams moment_fit_gamma(std::span<const double> xs) {
  const double m = mean(xs);
  const double v = variance(xs);
  if (!(m > 0.0) || !(v > 0.0))
    throw std::domain_error("moment_fit_gamma: mean and variance must be positive");
  return GammaParams(m * m / v, m / v);
}

}  // namespace ineq::stats
