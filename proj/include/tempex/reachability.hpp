#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/journey.hpp"

namespace tempex {

constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max();

/// Per-vertex minimal strict-journey lengths from one source over a time
/// window: label(w, t) is the least number of edges of a journey source->w
/// whose last edge is traversed at some t' <= t inside the window
/// (kUnreachable if none). Labels never increase with t; the table keeps
/// only the drop points, each with the predecessor that achieved it, which
/// is enough to answer label queries and to reconstruct journeys.
class LabelTable {
 public:
  struct Drop {
    TimeStep t;       // time of the improving edge traversal
    VertexId from;    // predecessor the edge was taken from
    std::int32_t value;
  };

  VertexId source() const { return source_; }
  TimeWindow window() const { return window_; }
  int n() const { return static_cast<int>(drops_.size()); }

  /// Label of v at time t (clamped to the window's end beyond it).
  std::int32_t label(VertexId v, TimeStep t) const;

  /// First time step at which v's label becomes <= max_len, if any.
  std::optional<TimeStep> first_reached(
      VertexId v, std::int32_t max_len = kUnreachable - 1) const;

  const std::vector<Drop>& drops(VertexId v) const { return drops_[v]; }

 private:
  friend LabelTable min_edge_labels(const TemporalGraph&, VertexId, TimeWindow,
                                    std::span<const TimeStep>);
  VertexId source_ = 0;
  TimeWindow window_;
  std::vector<std::vector<Drop>> drops_;
};

/// Runs the one-step relaxation
///   l_w^t = min(l_w^{t-1}, min over {w,x} in E_t of l_x^{t-1} + 1)
/// over the window. With a non-empty `active` list (sorted, inside the
/// window) edges are only relaxed at those steps; elsewhere labels carry
/// over, so reconstructed journeys use active steps only. Ties prefer the
/// earliest improving time, then the lowest predecessor id.
LabelTable min_edge_labels(const TemporalGraph& g, VertexId u, TimeWindow w,
                           std::span<const TimeStep> active = {});

/// Journey source->v of exactly label(v,t) edges, last edge at or before t.
/// Throws PreconditionError when v is unreachable by t.
Journey extract_journey(const LabelTable& table, VertexId v, TimeStep t);

/// Journey u->v departing no earlier than t_start that minimizes arrival
/// time, then edge count. On a constantly connected graph the arrival is at
/// most t_start + n - 2 (so the duration is at most n-1); a miss means the
/// input was not constantly connected and raises InternalGuaranteeError.
/// Requires 1 <= t_start <= L - n + 2.
Journey foremost_journey(const TemporalGraph& g, VertexId u, VertexId v,
                         TimeStep t_start);

/// All vertices within floor(k) hops of u in one snapshot (contains u).
std::vector<VertexId> snapshot_bounded_reach(const StaticGraph& s, VertexId u,
                                             double k);

/// A journey u->v of at most floor(k) edges built from recurring short
/// paths: requires at least ceil(k*n) snapshots of g to contain a path
/// u<->v of at most floor(k) edges; the returned journey traverses edges
/// only at such time steps. PreconditionError (carrying the qualifying
/// count) when too few snapshots qualify; InternalGuaranteeError if the
/// relaxation fails to finish despite the precondition, which would be a
/// bug.
Journey journey_from_recurring_paths(const TemporalGraph& g, VertexId u,
                                     VertexId v, double k);

}  // namespace tempex
