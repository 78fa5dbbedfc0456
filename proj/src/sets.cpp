#include "tempex/sets.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "tempex/intmath.hpp"
#include "tempex/reachability.hpp"

namespace tempex {

namespace {

std::vector<VertexId> sorted_unique(std::span<const VertexId> xs) {
  std::vector<VertexId> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// BFS parents from `root`, cut off at `hops`; parent[v] = -1 if not reached.
std::vector<VertexId> bounded_bfs_parents(const StaticGraph& s, VertexId root,
                                          int hops) {
  auto adj = s.adjacency();
  std::vector<VertexId> parent(s.n(), -1);
  std::vector<int> dist(s.n(), -1);
  parent[root] = root;
  dist[root] = 0;
  std::queue<VertexId> queue;
  queue.push(root);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    if (dist[x] == hops) continue;
    for (VertexId y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push(y);
      }
    }
  }
  return parent;
}

std::vector<VertexId> path_from_parents(const std::vector<VertexId>& parent,
                                        VertexId root, VertexId v) {
  std::vector<VertexId> path;
  for (VertexId at = v; at != root; at = parent[at]) path.push_back(at);
  path.push_back(root);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

JourneyFreeSet static_kfree_set(const StaticGraph& s, double k) {
  const int n = s.n();
  if (k <= 1 || k >= n) {
    throw PreconditionError("hop bound k must satisfy 1 < k < n");
  }
  if (!s.is_connected()) {
    throw PreconditionError("static k-free set needs a connected graph");
  }
  int hops = static_cast<int>(std::floor(k));

  JourneyFreeSet set;
  set.k = k;
  set.universe.resize(n);
  for (VertexId v = 0; v < n; ++v) set.universe[v] = v;

  // parents[i] = bounded BFS tree of members[i]; a candidate conflicts with
  // member i exactly when the tree reaches it.
  std::vector<std::vector<VertexId>> parents;
  for (VertexId v = 0; v < n; ++v) {
    bool excluded = false;
    for (std::size_t i = 0; i < set.members.size(); ++i) {
      if (parents[i][v] >= 0) {
        CoverWitness w;
        w.member = set.members[i];
        w.path = path_from_parents(parents[i], set.members[i], v);
        set.witnesses.emplace(v, std::move(w));
        excluded = true;
        break;
      }
    }
    if (!excluded) {
      set.members.push_back(v);
      parents.push_back(bounded_bfs_parents(s, v, hops));
    }
  }

  // |Z| < 2n/k is guaranteed for inclusion-maximal sets on connected graphs.
  if (static_cast<double>(set.members.size()) * k >= 2.0 * n) {
    throw InternalGuaranteeError("static k-free set of size " +
                                 std::to_string(set.members.size()) +
                                 " violates the 2n/k bound; this is a bug");
  }
  return set;
}

JourneyFreeSet journey_free_set(const TemporalGraph& g,
                                std::span<const VertexId> S, double k,
                                TimeWindow window) {
  const int n = g.n();
  if (S.empty()) throw PreconditionError("S must be nonempty");
  if (k <= 1 || k >= n) {
    throw PreconditionError("hop bound k must satisfy 1 < k < n");
  }
  if (window.first < 1 || window.last > g.lifetime() ||
      window.first > window.last) {
    throw RangeError("window outside the graph lifetime");
  }
  int hops = static_cast<int>(std::floor(k));

  JourneyFreeSet set;
  set.k = k;
  set.window = window;
  set.universe = sorted_unique(S);
  for (VertexId v : set.universe) {
    if (v < 0 || v >= n) throw RangeError("vertex in S out of range");
  }

  std::map<VertexId, LabelTable> tables;
  auto table_for = [&](VertexId v) -> const LabelTable& {
    auto it = tables.find(v);
    if (it == tables.end()) {
      it = tables.emplace(v, min_edge_labels(g, v, window)).first;
    }
    return it->second;
  };
  // Conflict = journeys of <= k edges in both directions inside the window.
  auto conflicts = [&](VertexId member, VertexId cand) {
    return table_for(member).label(cand, window.last) <= hops &&
           table_for(cand).label(member, window.last) <= hops;
  };

  for (VertexId v : set.universe) {
    bool excluded = false;
    for (VertexId m : set.members) {
      if (conflicts(m, v)) {
        CoverWitness w;
        w.member = m;
        w.member_to_outsider = extract_journey(table_for(m), v, window.last);
        w.outsider_to_member = extract_journey(table_for(v), m, window.last);
        set.witnesses.emplace(v, std::move(w));
        excluded = true;
        break;
      }
    }
    if (!excluded) set.members.push_back(v);
  }
  return set;
}

BoundReport check_journey_free_bound(const TemporalGraph& g,
                                     std::span<const VertexId> S, int q) {
  const auto n = static_cast<std::int64_t>(g.n());
  if (q < 1) throw PreconditionError("q must be a positive integer");
  auto universe = sorted_unique(S);
  if (universe.empty()) throw PreconditionError("S must be nonempty");
  if (static_cast<std::int64_t>(universe.size()) * q > n) {
    throw PreconditionError("|S| must be at most n/q");
  }
  if (4 * q >= n) {
    throw PreconditionError("q must satisfy q < n/4 so that k = 2*sqrt(nq) < n");
  }
  // ceil(4 n^2.5 / sqrt(q)) = ceil(sqrt(16 n^5 / q))
  TimeStep required = static_cast<TimeStep>(ceil_sqrt_ratio(16 * ipow(n, 5), q));
  if (g.lifetime() < required) {
    throw PreconditionError("lifetime " + std::to_string(g.lifetime()) +
                            " too short; the bound needs at least " +
                            std::to_string(required) + " time steps");
  }

  double k = 2.0 * std::sqrt(static_cast<double>(n) * q);
  BoundReport report;
  report.k = k;
  report.required_window = required;
  report.bound = std::sqrt(static_cast<double>(n) / q);
  report.set = journey_free_set(g, universe, k, g.full_window());
  report.set_size = report.set.members.size();
  auto size = static_cast<std::int64_t>(report.set_size);
  report.holds = size * size * q < n;
  return report;
}

}  // namespace tempex
