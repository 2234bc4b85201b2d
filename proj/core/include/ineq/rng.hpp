#pragma once

#include <cstdint>
#include <random>

namespace ineq::rng {

// SplitMix64, used to whiten seeds and derive substream seeds.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Stream-splitting rule: substream `stream` of a master seed is seeded with
// the second SplitMix64 output of (master ^ (C + stream * GOLDEN)). Rounds,
// annealing restarts and bootstrap replicates each get their own stream id,
// so results do not depend on thread count or evaluation order.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
  SplitMix64 mix(master ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
  mix.next();
  return mix.next();
}

inline std::mt19937_64 stream_rng(std::uint64_t master, std::uint64_t stream) {
  return std::mt19937_64(derive_stream_seed(master, stream));
}

// Uniform draw on the closed interval [0, 1]; both endpoints reachable.
inline double uniform_closed_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen()) / static_cast<double>(std::mt19937_64::max());
}

}  // namespace ineq::rng
