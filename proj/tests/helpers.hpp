#pragma once

#include <utility>
#include <vector>

#include "tempex/generators.hpp"
#include "tempex/graph.hpp"
#include "tempex/journey.hpp"

namespace tempex::testing {

inline TemporalGraph make(int n,
                          std::vector<std::vector<std::pair<int, int>>> snaps) {
  std::vector<std::vector<Edge>> edge_snaps;
  edge_snaps.reserve(snaps.size());
  for (const auto& snap : snaps) {
    std::vector<Edge> edges;
    edges.reserve(snap.size());
    for (auto [a, b] : snap) edges.push_back(make_edge(a, b));
    edge_snaps.push_back(std::move(edges));
  }
  return TemporalGraph(n, std::move(edge_snaps));
}

/// Static temporal graph: the same snapshot at every time step.
inline TemporalGraph make_static(int n,
                                 std::vector<std::pair<int, int>> edges,
                                 TimeStep lifetime) {
  std::vector<std::vector<std::pair<int, int>>> snaps(
      static_cast<std::size_t>(lifetime), edges);
  return make(n, std::move(snaps));
}

inline StaticGraph static_of(int n,
                             const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
  return StaticGraph(n, std::move(edges));
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return edges;
}

inline std::vector<std::pair<int, int>> complete_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return edges;
}

inline std::vector<std::pair<int, int>> star_edges(int n, int center = 0) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    if (v != center) edges.emplace_back(center, v);
  }
  return edges;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return edges;
}

/// Journey validity re-implemented from the definitions, independent of
/// journey_check, for the cross-test.
inline bool naive_journey_valid(const TemporalGraph& g, const Journey& j) {
  if (j.start < 0 || j.start >= g.n()) return false;
  VertexId at = j.start;
  TimeStep last_t = 0;
  for (const auto& s : j.steps) {
    if (s.from != at) return false;
    if (s.t <= last_t || s.t < 1 || s.t > g.lifetime()) return false;
    if (s.from < 0 || s.from >= g.n() || s.to < 0 || s.to >= g.n()) return false;
    if (s.from == s.to) return false;
    bool present = false;
    for (const auto& e : g.snapshot(s.t)) {
      if ((e.u == s.from && e.v == s.to) || (e.u == s.to && e.v == s.from)) {
        present = true;
      }
    }
    if (!present) return false;
    at = s.to;
    last_t = s.t;
  }
  return true;
}

/// Random valid journey: a seeded walk that sometimes waits.
inline Journey random_walk_journey(const TemporalGraph& g, SplitRng& rng) {
  Journey j;
  j.start = static_cast<VertexId>(rng.uniform(g.n()));
  VertexId at = j.start;
  for (TimeStep t = 1; t <= g.lifetime(); ++t) {
    if (rng.uniform(3) == 0) continue;  // wait
    std::vector<VertexId> nbrs;
    for (const auto& e : g.snapshot(t)) {
      if (e.u == at) nbrs.push_back(e.v);
      if (e.v == at) nbrs.push_back(e.u);
    }
    if (nbrs.empty()) continue;
    VertexId to = nbrs[rng.uniform(static_cast<std::uint32_t>(nbrs.size()))];
    j.steps.push_back({t, at, to});
    at = to;
  }
  return j;
}

}  // namespace tempex::testing
