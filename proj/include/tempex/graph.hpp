#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempex/error.hpp"

namespace tempex {

using VertexId = std::int32_t;
using TimeStep = std::int32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Normalizes the orientation; throws ValidationError on self-loops.
Edge make_edge(VertexId a, VertexId b);

/// Inclusive range of time steps [first, last], 1-indexed.
struct TimeWindow {
  TimeStep first = 1;
  TimeStep last = 1;
  TimeStep length() const { return last - first + 1; }
  bool contains(TimeStep t) const { return first <= t && t <= last; }
  auto operator<=>(const TimeWindow&) const = default;
};

struct Violation {
  std::string message;
  std::optional<TimeStep> snapshot;  // 1-indexed when the problem is per-step
};

using ValidationReport = std::vector<Violation>;

/// One static graph: a vertex count plus a canonical sorted edge set.
/// Connectivity is not an invariant here; callers that need it assert it.
class StaticGraph {
 public:
  StaticGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(VertexId a, VertexId b) const;
  std::vector<std::vector<VertexId>> adjacency() const;
  bool is_connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// A temporal graph: n vertices (ids 0..n-1) observed over L time steps
/// (1..L), one undirected edge set per step. Immutable after construction;
/// safe to share across threads. Construction normalizes edge orientation,
/// sorts and deduplicates each snapshot, and rejects out-of-range ids,
/// self-loops, n < 2 and L < 1. Per-step connectivity is checked separately
/// by validate() so broken instances can be reported rather than refused.
class TemporalGraph {
 public:
  TemporalGraph(int n, std::vector<std::vector<Edge>> snapshots,
                std::optional<VertexId> start = std::nullopt);

  int n() const { return n_; }
  TimeStep lifetime() const { return static_cast<TimeStep>(snapshots_.size()); }
  std::optional<VertexId> start() const { return start_; }

  /// Snapshot at time step t, 1-indexed. Throws RangeError out of range.
  const std::vector<Edge>& snapshot(TimeStep t) const;
  bool has_edge(TimeStep t, VertexId a, VertexId b) const;

  /// Union of all snapshot edge sets.
  StaticGraph underlying_graph() const;

  /// Sub-lifetime [a, b]; snapshot t of the result equals snapshot a+t-1 of
  /// this graph, so journey times map back via shift_journey(j, a-1).
  TemporalGraph window(TimeStep a, TimeStep b) const;

  TimeWindow full_window() const { return {1, lifetime()}; }

 private:
  int n_;
  std::vector<std::vector<Edge>> snapshots_;
  std::optional<VertexId> start_;
};

/// Reports every disconnected snapshot (all violations, never fail-fast).
/// Empty report == valid constantly connected instance.
ValidationReport validate(const TemporalGraph& g);

/// True when every snapshot of g is connected.
bool is_constantly_connected(const TemporalGraph& g);

}  // namespace tempex
