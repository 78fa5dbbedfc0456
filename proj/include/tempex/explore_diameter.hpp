#pragma once

#include "tempex/graph.hpp"
#include "tempex/journey.hpp"

namespace tempex {

/// Exact diameter via all-pairs BFS. PreconditionError when disconnected.
int snapshot_diameter(const StaticGraph& s);

/// Exploration of a graph whose every snapshot has diameter at most k:
/// walks a vertex permutation, realizing each hop u -> next(u) as a journey
/// of at most k edges inside its own window of kn time steps (every step of
/// which contains a path of <= k edges between the endpoints). Guarantees
/// at most k(n-1) edges and arrival at most kn(n-1).
///
/// The default permutation is s followed by ascending ids, hopping through
/// every listed vertex. greedy_order instead picks, per window, the
/// unvisited vertex whose hop journey is cheapest; same guarantees,
/// usually fewer edges.
///
/// Requires k integer with 0 < k < n, every snapshot diameter <= k
/// (verified; the error names the first offending snapshot), and lifetime
/// >= k*n^2.
ExplorationReport explore_bounded_diameter(const TemporalGraph& g, VertexId s,
                                           int k, bool greedy_order = false);

}  // namespace tempex
