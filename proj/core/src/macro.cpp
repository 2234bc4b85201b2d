#include "ineq/macro.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ineq {

double alpha_from_omega(double omega) {
  if (!(omega > 0.0) || !(omega < 1.0))
    throw std::domain_error("alpha_from_omega: omega must lie in (0, 1), got " +
                            std::to_string(omega));
  return (1.0 - omega) / omega;
}

double harmonic_mean_omega(std::span<const double> shares, std::span<const double> omegas) {
  if (shares.size() != omegas.size() || shares.empty())
    throw std::invalid_argument("harmonic_mean_omega: shares and omegas must be same nonempty size");
  double share_sum = 0.0;
  double inv = 0.0;
  for (std::size_t k = 0; k < shares.size(); ++k) {
    if (shares[k] < 0.0)
      throw std::domain_error("harmonic_mean_omega: negative share");
    if (!(omegas[k] > 0.0) || !(omegas[k] < 1.0))
      throw std::domain_error("harmonic_mean_omega: omegas must lie in (0, 1)");
    share_sum += shares[k];
    inv += shares[k] / omegas[k];
  }
  if (std::fabs(share_sum - 1.0) > 1e-9)
    throw std::domain_error("harmonic_mean_omega: shares must sum to 1, got " +
                            std::to_string(share_sum));
  return 1.0 / inv;
}

MacroContext::MacroContext(double omega_, double omega_tilde_, double mu_)
    : omega(omega_), omega_tilde(omega_tilde_), mu(mu_) {
  if (!(omega > 0.0) || !(omega < 1.0))
    throw std::invalid_argument("MacroContext: omega must lie in (0, 1)");
  if (!(omega_tilde > 0.0) || !(omega_tilde < 1.0))
    throw std::invalid_argument("MacroContext: omega_tilde must lie in (0, 1)");
  if (!(mu > 0.0))
    throw std::invalid_argument("MacroContext: mu must be positive");
}

double lambda_from_context(const MacroContext& ctx) {
  return (1.0 - ctx.omega) / ctx.product();
}

GammaParams gamma_params_from_context(const MacroContext& ctx) {
  return GammaParams(alpha_from_omega(ctx.omega), lambda_from_context(ctx));
}

double conditional_median_from_context(const MacroContext& ctx) {
  if (!(ctx.omega < 0.75))
    throw std::domain_error(
        "conditional_median_from_context: requires omega < 3/4, got " +
        std::to_string(ctx.omega));
  return (1.0 - (4.0 / 3.0) * ctx.omega) / (1.0 - ctx.omega) * (ctx.product() / ctx.omega);
}

}  // namespace ineq
