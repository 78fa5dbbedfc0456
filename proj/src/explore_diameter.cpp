#include "tempex/explore_diameter.hpp"

#include <algorithm>
#include <queue>

#include "tempex/reachability.hpp"

namespace tempex {

namespace {

// Eccentricity of root, or -1 when some vertex is unreachable.
int eccentricity(const std::vector<std::vector<VertexId>>& adj, VertexId root) {
  std::vector<int> dist(adj.size(), -1);
  dist[root] = 0;
  std::queue<VertexId> queue;
  queue.push(root);
  int ecc = 0;
  std::size_t seen = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    for (VertexId y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        ecc = std::max(ecc, dist[y]);
        ++seen;
        queue.push(y);
      }
    }
  }
  return seen == adj.size() ? ecc : -1;
}

// Hop journey u->v of <= k edges inside [a,b] of g, in original time coords.
Journey hop_in_window(const TemporalGraph& g, VertexId u, VertexId v, int k,
                      TimeStep a, TimeStep b) {
  TemporalGraph sub = g.window(a, b);
  Journey j = journey_from_recurring_paths(sub, u, v, k);
  return shift_journey(j, a - 1);
}

}  // namespace

int snapshot_diameter(const StaticGraph& s) {
  if (s.n() == 1) return 0;
  auto adj = s.adjacency();
  int diameter = 0;
  for (VertexId v = 0; v < s.n(); ++v) {
    int ecc = eccentricity(adj, v);
    if (ecc < 0) {
      throw PreconditionError("diameter of a disconnected graph is undefined");
    }
    diameter = std::max(diameter, ecc);
  }
  return diameter;
}

ExplorationReport explore_bounded_diameter(const TemporalGraph& g, VertexId s,
                                           int k, bool greedy_order) {
  const int n = g.n();
  if (s < 0 || s >= n) throw RangeError("start vertex out of range");
  if (k < 1 || k >= n) {
    throw PreconditionError("diameter bound needs 0 < k < n");
  }
  for (TimeStep t = 1; t <= g.lifetime(); ++t) {
    StaticGraph snap(n, g.snapshot(t));
    if (!snap.is_connected()) {
      throw PreconditionError("snapshot " + std::to_string(t) +
                              " disconnected");
    }
    int d = snapshot_diameter(snap);
    if (d > k) {
      throw PreconditionError("snapshot " + std::to_string(t) +
                              " has diameter " + std::to_string(d) + " > k = " +
                              std::to_string(k));
    }
  }
  const auto window_len = static_cast<std::int64_t>(k) * n;
  const std::int64_t required = window_len * n;  // k*n^2
  if (g.lifetime() < required) {
    throw PreconditionError("lifetime " + std::to_string(g.lifetime()) +
                            " too short; bounded-diameter exploration needs " +
                            std::to_string(required));
  }

  Journey journey;
  journey.start = s;
  std::vector<bool> visited(n, false);
  visited[s] = true;
  int visited_count = 1;
  VertexId cur = s;

  auto mark = [&](const Journey& hop) {
    for (const auto& step : hop.steps) {
      if (!visited[step.to]) {
        visited[step.to] = true;
        ++visited_count;
      }
    }
  };

  if (greedy_order) {
    int window_index = 0;
    while (visited_count < n) {
      auto a = static_cast<TimeStep>(window_index * window_len + 1);
      auto b = static_cast<TimeStep>((window_index + 1) * window_len);
      ++window_index;
      Journey best;
      bool have = false;
      for (VertexId v = 0; v < n; ++v) {
        if (visited[v]) continue;
        Journey hop = hop_in_window(g, cur, v, k, a, b);
        if (!have || hop.length() < best.length()) {
          best = std::move(hop);
          have = true;
        }
      }
      mark(best);
      cur = best.end();
      append_journey(journey, best);
    }
  } else {
    std::vector<VertexId> perm = {s};
    for (VertexId v = 0; v < n; ++v) {
      if (v != s) perm.push_back(v);
    }
    for (int i = 0; i + 1 < n && visited_count < n; ++i) {
      auto a = static_cast<TimeStep>(static_cast<std::int64_t>(i) * window_len + 1);
      auto b = static_cast<TimeStep>(static_cast<std::int64_t>(i + 1) * window_len);
      Journey hop = hop_in_window(g, perm[i], perm[i + 1], k, a, b);
      mark(hop);
      cur = hop.end();
      append_journey(journey, hop);
    }
  }

  return make_report(g, std::move(journey), "diameter");
}

}  // namespace tempex
