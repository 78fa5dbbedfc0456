#pragma once

#include <vector>

#include "tempex/graph.hpp"
#include "tempex/journey.hpp"

namespace tempex {

enum class Rotation { kClockwise, kCounterClockwise };

/// Cyclic order of a temporal cycle as seen from a start vertex s.
/// Clockwise is the direction of the lower-id neighbor of s, which pins the
/// orientation deterministically. The antipodal edge joins the vertex at
/// clockwise distance floor((n-1)/2) from s with the one at counter-
/// clockwise distance ceil((n-1)/2).
struct CycleLayout {
  std::vector<VertexId> order;     // order[0] == s, order[1] == cw neighbor
  std::vector<int> position;       // inverse of order
  VertexId s = 0;
  Edge antipodal;

  int n() const { return static_cast<int>(order.size()); }
  VertexId at(int pos) const {
    int m = n();
    return order[static_cast<std::size_t>(((pos % m) + m) % m)];
  }
  VertexId neighbor(VertexId v, Rotation dir) const;
  /// Edges walked from v in direction dir: 0..n-1.
  int distance(VertexId from, VertexId to, Rotation dir) const;
};

/// Extracts the layout. The underlying graph must be one cycle through all
/// n vertices, except that one cycle edge may be permanently absent (the
/// union of the snapshots is then a Hamiltonian path, closed here by the
/// missing edge); ShapeError otherwise.
CycleLayout as_cycle(const TemporalGraph& g, VertexId s);

/// Vertices from which an agent starting at time t and moving one edge per
/// step in the given direction completes n-1 steps without meeting an
/// absent edge. Constant connectivity (at most one cycle edge missing per
/// snapshot) guarantees the set is nonempty. Directions refer to the
/// canonical layout as_cycle(g, 0). Requires t <= L - n + 2.
std::vector<VertexId> unblocked_starts(const TemporalGraph& g, TimeStep t,
                                       Rotation dir);

/// Cycle exploration within 2n-2 time steps traversing at most
/// floor(3(n-1)/2) edges: reach an unblocked clockwise start and sweep; if
/// that run exceeds the bound, the counter-clockwise analogue cannot, and
/// is returned instead. Requires lifetime >= 2n-2.
ExplorationReport explore_cycle(const TemporalGraph& g, VertexId s);

/// Worst-case family: every snapshot is the cycle 0-1-..-(n-1)-0 minus its
/// antipodal edge (relative to s = 0). Any exploration from 0 needs
/// floor(3(n-1)/2) edges. Requires n >= 3, lifetime >= 2n-2.
TemporalGraph gen_cycle_missing_m(int n, TimeStep lifetime);

/// Tight family with lifetime exactly 2n-3: edge {0,1} absent during
/// [1, n-2] and edge {1,2} absent during [n-1, 2n-3]. The only exploration
/// from 0 that fits the lifetime traverses 2n-3 edges. Requires n >= 3.
TemporalGraph gen_cycle_tight(int n);

}  // namespace tempex
