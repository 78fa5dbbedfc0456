#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/journey.hpp"

namespace tempex {

/// Why a vertex outside the set could not be added: a member it conflicts
/// with, plus the journeys (temporal sets) or the path (static sets)
/// realizing the conflict.
struct CoverWitness {
  VertexId member = 0;
  std::optional<Journey> member_to_outsider;  // member -> outsider, <= k edges
  std::optional<Journey> outsider_to_member;  // outsider -> member, <= k edges
  std::vector<VertexId> path;  // static case: member..outsider, <= k edges
};

/// A greedily built inclusion-maximal conflict-free subset together with
/// the covering witnesses that justify maximality. Temporal conflicts need
/// journeys of at most k edges in BOTH directions inside the window; static
/// conflicts need a single path of at most k edges.
struct JourneyFreeSet {
  std::vector<VertexId> members;   // sorted
  std::vector<VertexId> universe;  // sorted; members is a subset
  double k = 0;
  std::optional<TimeWindow> window;  // absent for static sets
  std::map<VertexId, CoverWitness> witnesses;  // one per universe \ members
};

/// Static variant: greedy over ascending vertex ids, conflict = a path of
/// at most floor(k) edges. Requires s connected and 1 < k < n. The produced
/// set always has fewer than 2n/k members; a violation of that bound is a
/// bug and raises InternalGuaranteeError.
JourneyFreeSet static_kfree_set(const StaticGraph& s, double k);

/// Temporal variant over the subset S and the given window. Greedy over
/// ascending vertex ids; pairwise conflicts are decided with one label
/// table per involved vertex, memoized for the duration of the call.
/// Requires S nonempty and 1 < k < n.
JourneyFreeSet journey_free_set(const TemporalGraph& g,
                                std::span<const VertexId> S, double k,
                                TimeWindow window);

/// Outcome of the size-bound check on a temporal k-journey-free set with
/// k = 2*sqrt(n*q): the set must have fewer than sqrt(n/q) members once
/// the window is long enough. holds == false flags an implementation bug.
struct BoundReport {
  std::size_t set_size = 0;
  double bound = 0;  // sqrt(n/q)
  bool holds = false;
  double k = 0;
  TimeStep required_window = 0;
  JourneyFreeSet set;
};

/// Builds the k-journey-free subset of S over the graph's whole lifetime
/// with k = 2*sqrt(n*q) and reports its size against sqrt(n/q).
/// Requires |S|*q <= n, 4q < n, and lifetime >= ceil(4*n^2.5/sqrt(q));
/// PreconditionError otherwise (stating the required minimum lifetime).
BoundReport check_journey_free_bound(const TemporalGraph& g,
                                     std::span<const VertexId> S, int q);

}  // namespace tempex
