#pragma once

#include <cstdint>
#include <optional>

#include "tempex/graph.hpp"
#include "tempex/journey.hpp"

namespace tempex {

/// Exact optimum over all complete explorations within the lifetime.
struct OracleResult {
  bool feasible = false;
  int best_edges = 0;        // meaningful only when feasible
  TimeStep best_arrival = 0; // meaningful only when feasible
  std::optional<Journey> witness;
  /// Whether exactly one timed journey attains best_edges (on demand).
  std::optional<bool> unique;
};

enum class Objective { kMinEdges, kMinArrival };

/// Number of DP states the oracle may allocate before raising
/// CapacityError. The default comes from TEMPEX_ORACLE_STATE_BUDGET when
/// set (integer state count), else 50 million, which admits n = 20.
std::uint64_t oracle_state_budget();

/// Exhaustive dynamic program over (time, vertex, visited set). Minimizes
/// the traversed edge count or the arrival time; arrival ties break toward
/// fewer edges in the witness. With count_unique the min-edges optimum is
/// additionally tested for uniqueness over timed journeys. Infeasible
/// instances return feasible = false (not an error). state_budget = 0 uses
/// oracle_state_budget(). Requires n <= 20.
OracleResult optimal_exploration(const TemporalGraph& g, VertexId s,
                                 Objective objective,
                                 bool count_unique = false,
                                 std::uint64_t state_budget = 0);

/// Minimal number of edges of a strict journey u->v inside the window,
/// nullopt when no journey exists. Zero-one BFS over (time, vertex) states;
/// kept deliberately independent of the LabelTable recurrence so the two
/// can cross-check each other.
std::optional<int> journey_oracle(const TemporalGraph& g, VertexId u,
                                  VertexId v, TimeWindow window,
                                  std::uint64_t state_budget = 0);

}  // namespace tempex
