#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tempex/graph.hpp"

namespace tempex {

/// Deterministic splitmix64-based generator. Not std::mt19937 on purpose:
/// the standard distributions are implementation-defined, and generated
/// instance files must be byte-identical across platforms.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform draw in [0, bound), bound > 0. Rejection sampled, unbiased.
  std::uint32_t uniform(std::uint32_t bound);
  /// Uniform double in [0, 1).
  double unit();

  /// Stream for snapshot t derived from a master seed; adding snapshots
  /// never reshuffles earlier ones.
  static SplitRng for_snapshot(std::uint64_t master_seed, TimeStep t);

 private:
  std::uint64_t state_;
};

/// Each snapshot is a uniform random spanning tree (random Pruefer
/// sequence) plus every non-tree edge independently with probability
/// density.
TemporalGraph gen_random_connected(int n, TimeStep lifetime, double density,
                                   std::uint64_t seed);

/// Each snapshot is a star with a seeded center schedule; per-snapshot
/// diameter is 2 (1 for n = 2).
TemporalGraph gen_rotating_star(int n, TimeStep lifetime, std::uint64_t seed);

/// Each snapshot is a random spanning tree of bounded depth plus random
/// extra edges, rejection-resampled until its diameter is at most k.
/// Requires 1 <= k < n.
TemporalGraph gen_bounded_diameter(int n, TimeStep lifetime, int k,
                                   std::uint64_t seed);

/// Underlying graph is a cycle on a seeded vertex order; every snapshot
/// drops at most one cycle edge, chosen per step.
TemporalGraph gen_random_cycle(int n, TimeStep lifetime, std::uint64_t seed);

/// One instance request: a family name plus its parameters. Identical
/// specs produce byte-identical instances, and every produced instance
/// passes validate().
struct GenSpec {
  std::string family;  // random | rotating-star | bounded-diameter |
                       // random-cycle | cycle-missing-m | cycle-tight
  int n = 0;
  TimeStep lifetime = 0;  // cycle-tight fixes its own lifetime
  std::uint64_t seed = 0;
  std::optional<int> k;   // bounded-diameter only
  double density = 0.5;   // random only
};

TemporalGraph generate_instance(const GenSpec& spec);

}  // namespace tempex
