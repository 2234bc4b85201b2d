#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "ineq/gamma.hpp"

namespace ineq {

enum class SimVariant {
  InequalityProcess,  // fair coin decides the direction of the transfer
  SavedWealth,        // continuous uniform mixing variate on [0, 1]
};

struct Particle {
  double wealth;    // nonnegative at all times
  int class_index;  // index into Population::omegas
};

struct Population {
  std::vector<Particle> particles;
  std::vector<double> omegas;  // loss fraction per class, each in (0, 1)
  double total_wealth = 0.0;   // cached at construction / refresh_total()

  Population(std::vector<Particle> particles_, std::vector<double> omegas_);

  std::size_t size() const { return particles.size(); }
  double recompute_total() const;  // compensated sum over current wealths
  void refresh_total() { total_wealth = recompute_total(); }
  std::vector<double> class_shares() const;  // counts / N

  // CSV snapshot: particle_id,class_id,wealth
  void write_csv(std::ostream& os) const;
};

struct EqualStart {
  double value = 1.0;
};
struct GammaStart {
  GammaParams params;
};
struct ExplicitStart {
  std::vector<double> wealths;
};
using InitialWealth = std::variant<EqualStart, GammaStart, ExplicitStart>;

struct SimConfig {
  std::uint64_t seed = 0;
  long rounds = 0;
  SimVariant variant = SimVariant::InequalityProcess;
  InitialWealth initial_wealth = EqualStart{};
};

// One competitive encounter. `draw` is the coin (0 or 1) for the Inequality
// Process and the uniform [0,1] mixing variate for Saved Wealth. The
// transfer is zero-sum by construction: one side's loss is the other's gain.
struct EncounterOutcome {
  double xi_after;
  double xj_after;
  bool i_won;  // Saved Wealth: net gain for i
};
EncounterOutcome encounter(double xi, double xj, double omega_i, double omega_j,
                           double draw, SimVariant variant);

// One round: a uniform random perfect matching via a seeded shuffle; with odd
// N one particle (uniformly random through the shuffle) sits out. Optional
// win_counts accumulates per-particle wins. Returns the sit-out index, or
// npos when N is even.
inline constexpr std::size_t kNoSitOut = static_cast<std::size_t>(-1);
std::size_t step(Population& pop, std::mt19937_64& gen, SimVariant variant,
                 std::vector<long>* win_counts = nullptr);

struct TrajectoryRow {
  long round;
  int class_id;  // 1-based, 0 = whole population
  double mean;
  double variance;
  double total_wealth;
};

struct RunResult {
  Population population;
  std::vector<TrajectoryRow> trajectory;
  std::vector<long> win_counts;        // per particle
  std::vector<long> encounter_counts;  // per particle (rounds minus sit-outs)
};

// Builds the starting population: class assignment is deterministic by
// cumulative share (block layout); Gamma starts draw from stream 0 of the seed.
Population make_population(std::size_t n, std::span<const double> omegas,
                           std::span<const double> class_shares,
                           const InitialWealth& init, std::uint64_t seed);

// Applies config.rounds rounds; round r uses rng stream r+1 of config.seed.
// Deterministic for a fixed (config, pop0). summary_every = 0 picks a cadence
// of about 100 rows.
RunResult run(const SimConfig& config, Population pop0, long summary_every = 0);

// Pairs of (wealth before, wealth change) for populations with identical
// layout; the Inequality Process puts every loser exactly on the ray
// delta = -omega * wealth.
std::vector<std::pair<double, double>> forward_diff_scatter(const Population& before,
                                                            const Population& after);

// Per-class relative frequencies over lower bin edges (last bin open-ended).
// Throws if a class is empty, naming the class.
std::vector<std::vector<double>> stationary_histogram(const Population& pop,
                                                      std::span<const double> lower_edges);

}  // namespace ineq
