#pragma once

#include <span>
#include <vector>

#include "ineq/gamma.hpp"

namespace ineq::stats {

// Neumaier compensated summation.
double compensated_sum(std::span<const double> xs);

double mean(std::span<const double> xs);

// Sample variance (divisor n - 1).
double variance(std::span<const double> xs);

// z-scores: (x - mean) / sd. Throws on constant input.
std::vector<double> standardize(std::span<const double> xs);

double pearson_correlation(std::span<const double> a, std::span<const double> b);

// Two-sample Kolmogorov-Smirnov statistic (max ecdf distance).
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Method-of-moments gamma fit: shape = mean^2 / var, rate = mean / var.
GammaParams moment_fit_gamma(std::span<const double> xs);

}  // namespace ineq::stats
