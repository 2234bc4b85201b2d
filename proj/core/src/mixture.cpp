#include "ineq/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ineq {

MixtureModel::MixtureModel(std::vector<Component> comps) : components(std::move(comps)) {
  if (components.empty())
    throw std::invalid_argument("MixtureModel: needs at least one component");
  double sum = 0.0;
  for (const auto& c : components) {
    if (c.weight < 0.0)
      throw std::invalid_argument("MixtureModel: component weights must be nonnegative");
    sum += c.weight;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("MixtureModel: weights must sum to 1, got " +
                                std::to_string(sum));
}

double MixtureModel::mean() const {
  double m = 0.0;
  for (const auto& c : components) m += c.weight * c.params.mean();
  return m;
}

double mixture_pdf(const MixtureModel& m, double x) {
  double v = 0.0;
  for (const auto& c : m.components) v += c.weight * pdf(c.params, x);
  return v;
}

double mixture_cdf(const MixtureModel& m, double x) {
  double v = 0.0;
  for (const auto& c : m.components) v += c.weight * cdf(c.params, x);
  return v;
}

double mixture_quantile(const MixtureModel& m, double q) {
  if (!(q > 0.0) || !(q < 1.0))
    throw std::domain_error("mixture_quantile: q must lie in (0, 1)");
  if (m.components.size() == 1) return quantile(m.components.front().params, q);

  // The mixture quantile lies between the smallest and largest component
  // quantiles; the mixture cdf is monotone on that bracket.
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& c : m.components) {
    const double xq = quantile(c.params, q);
    lo = std::min(lo, xq);
    hi = std::max(hi, xq);
  }
  if (lo == hi) return lo;

  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = mixture_cdf(m, mid) - q;
    if (std::fabs(f) <= 1e-9 || (hi - lo) <= std::numeric_limits<double>::epsilon() * hi)
      return mid;
    if (f > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

MacroMixture::MacroMixture(std::vector<double> omegas_, std::vector<double> shares_, double mu_)
    : omegas(std::move(omegas_)), shares(std::move(shares_)), mu(mu_) {
  if (omegas.empty() || omegas.size() != shares.size())
    throw std::invalid_argument("MacroMixture: omegas and shares must be same nonempty size");
  if (!(mu > 0.0)) throw std::invalid_argument("MacroMixture: mu must be positive");
  harmonic_mean_omega(shares, omegas);  // validates ranges and share sum
}

double MacroMixture::omega_tilde() const { return harmonic_mean_omega(shares, omegas); }

MacroContext MacroMixture::context(std::size_t k) const {
  return MacroContext(omegas.at(k), omega_tilde(), mu);
}

MixtureModel MacroMixture::mixture() const {
  const double wt = omega_tilde();
  std::vector<MixtureModel::Component> comps;
  comps.reserve(omegas.size());
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    const MacroContext ctx(omegas[k], wt, mu);
    comps.push_back({shares[k], gamma_params_from_context(ctx)});
  }
  return MixtureModel(std::move(comps));
}

MacroMixture MacroMixture::scaled_product(double factor) const {
  if (!(factor > 0.0)) throw std::domain_error("scaled_product: factor must be positive");
  return MacroMixture(omegas, shares, mu * factor);
}

}  // namespace ineq
