#pragma once

#include <string>
#include <vector>

#include "tempex/graph.hpp"

namespace tempex {

/// One edge traversal at time step t.
struct JourneyStep {
  TimeStep t = 0;
  VertexId from = 0;
  VertexId to = 0;
  auto operator<=>(const JourneyStep&) const = default;
};

/// A strict journey: at most one edge per time step, strictly increasing
/// times, consecutive steps chained. The empty step sequence is a valid
/// journey (the agent stays at start).
struct Journey {
  VertexId start = 0;
  std::vector<JourneyStep> steps;

  bool empty() const { return steps.empty(); }
  VertexId end() const { return steps.empty() ? start : steps.back().to; }
  int length() const { return static_cast<int>(steps.size()); }

  auto operator<=>(const Journey&) const = default;
};

/// length = edge count, arrival = time of the last edge, duration =
/// arrival - first + 1. All three are 0 for the empty journey.
struct JourneyStats {
  int length = 0;
  TimeStep arrival = 0;
  TimeStep duration = 0;
  auto operator<=>(const JourneyStats&) const = default;
};

JourneyStats journey_stats(const Journey& j);

/// Checks every journey invariant against g: vertex ids in range, times in
/// [1,L] strictly increasing, steps chained from the start vertex, and each
/// traversed edge present in its snapshot. All problems are reported.
ValidationReport journey_check(const TemporalGraph& g, const Journey& j);

/// Adds delta to every step time (maps journeys from a window back to the
/// original time axis; window(g,a,b) journeys shift by a-1).
Journey shift_journey(const Journey& j, TimeStep delta);

/// Appends `tail` to `head`. The tail must continue where the head ends and
/// start strictly after the head's last time step.
void append_journey(Journey& head, const Journey& tail);

/// Sorted set of every vertex the journey touches, including the start.
std::vector<VertexId> visited_vertices(const Journey& j);

/// Result of one exploration algorithm run.
struct ExplorationReport {
  Journey journey;
  std::vector<VertexId> visited;  // sorted
  bool complete = false;          // visited == all vertices
  JourneyStats stats;
  std::string algorithm;
};

/// Builds the report, re-checking the journey against g; a journey that
/// fails journey_check here is an algorithm bug.
ExplorationReport make_report(const TemporalGraph& g, Journey j,
                              std::string algorithm);

}  // namespace tempex
