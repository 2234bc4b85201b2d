#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ineq/gamma.hpp"
#include "ineq/macro.hpp"

namespace ineq {

// Weighted gamma mixture. Weights must be nonnegative and sum to 1
// within 1e-12.
struct MixtureModel {
  struct Component {
    double weight;
    GammaParams params;
  };

  std::vector<Component> components;

  explicit MixtureModel(std::vector<Component> comps);

  double mean() const;
};

double mixture_pdf(const MixtureModel& m, double x);
double mixture_cdf(const MixtureModel& m, double x);

// Inverts mixture_cdf by bisection on the bracket spanned by the component
// quantiles; terminates at |cdf(x) - q| <= 1e-9 in probability.
double mixture_quantile(const MixtureModel& m, double q);

// A mixture whose components share one (omega_tilde, mu) pair: the
// unconditional wage model over omega classes. omega_tilde is the harmonic
// mean implied by the shares.
struct MacroMixture {
  std::vector<double> omegas;
  std::vector<double> shares;  // class proportions, sum to 1
  double mu;

  MacroMixture(std::vector<double> omegas_, std::vector<double> shares_, double mu_);

  std::size_t size() const { return omegas.size(); }
  double omega_tilde() const;
  double product() const { return omega_tilde() * mu; }
  MacroContext context(std::size_t k) const;
  MixtureModel mixture() const;

  // Same shares, product scaled by `factor` (applied through mu).
  MacroMixture scaled_product(double factor) const;
};

}  // namespace ineq
