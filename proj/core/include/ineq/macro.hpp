#pragma once

#include <span>

#include "ineq/gamma.hpp"

namespace ineq {

// Gamma shape implied by a loss fraction: (1 - omega) / omega.
double alpha_from_omega(double omega);

// Share-weighted harmonic mean of the class loss fractions,
// 1 / sum_k(shares[k] / omegas[k]). Shares must sum to 1.
double harmonic_mean_omega(std::span<const double> shares, std::span<const double> omegas);

// Macro state of one omega class at one time point. The product
// omega_tilde * mu drives all distributional change; the class sees it
// through its rate parameter.
struct MacroContext {
  double omega;        // class loss fraction, in (0, 1)
  double omega_tilde;  // harmonic mean of all loss fractions, in (0, 1)
  double mu;           // unconditional mean wage income, > 0

  MacroContext(double omega_, double omega_tilde_, double mu_);

  double product() const { return omega_tilde * mu; }
  double conditional_mean() const { return product() / omega; }
};

// Gamma rate implied by a context: (1 - omega) / (omega_tilde * mu).
double lambda_from_context(const MacroContext& ctx);

GammaParams gamma_params_from_context(const MacroContext& ctx);

// Median of the class distribution via the Doodson approximation expressed
// in omega terms: [(1 - (4/3) omega) / (1 - omega)] * (omega_tilde * mu / omega).
// Requires omega < 3/4.
double conditional_median_from_context(const MacroContext& ctx);

}  // namespace ineq
