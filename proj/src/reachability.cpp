#include "tempex/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace tempex {

std::int32_t LabelTable::label(VertexId v, TimeStep t) const {
  if (v == source_) return 0;
  const auto& ds = drops_[v];
  // Last drop at or before t; labels are constant between drops.
  auto it = std::upper_bound(
      ds.begin(), ds.end(), t,
      [](TimeStep lhs, const Drop& d) { return lhs < d.t; });
  if (it == ds.begin()) return kUnreachable;
  return std::prev(it)->value;
}

std::optional<TimeStep> LabelTable::first_reached(VertexId v,
                                                  std::int32_t max_len) const {
  if (v == source_) return window_.first;
  for (const auto& d : drops_[v]) {
    if (d.value <= max_len) return d.t;
  }
  return std::nullopt;
}

LabelTable min_edge_labels(const TemporalGraph& g, VertexId u, TimeWindow w,
                           std::span<const TimeStep> active) {
  if (u < 0 || u >= g.n()) throw RangeError("source vertex out of range");
  if (w.first < 1 || w.last > g.lifetime() || w.first > w.last) {
    throw RangeError("label window [" + std::to_string(w.first) + "," +
                     std::to_string(w.last) + "] outside [1," +
                     std::to_string(g.lifetime()) + "]");
  }

  const int n = g.n();
  LabelTable table;
  table.source_ = u;
  table.window_ = w;
  table.drops_.resize(n);

  std::vector<std::int32_t> prev(n, kUnreachable);
  prev[u] = 0;
  std::vector<std::int32_t> cand(n);
  std::vector<VertexId> cand_from(n);

  auto relax_step = [&](TimeStep t) {
    std::fill(cand.begin(), cand.end(), kUnreachable);
    for (const auto& e : g.snapshot(t)) {
      if (prev[e.u] != kUnreachable) {
        std::int32_t c = prev[e.u] + 1;
        if (c < cand[e.v] || (c == cand[e.v] && e.u < cand_from[e.v])) {
          cand[e.v] = c;
          cand_from[e.v] = e.u;
        }
      }
      if (prev[e.v] != kUnreachable) {
        std::int32_t c = prev[e.v] + 1;
        if (c < cand[e.u] || (c == cand[e.u] && e.v < cand_from[e.u])) {
          cand[e.u] = c;
          cand_from[e.u] = e.v;
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      if (cand[v] < prev[v]) {
        table.drops_[v].push_back({t, cand_from[v], cand[v]});
        prev[v] = cand[v];
      }
    }
  };

  if (active.empty()) {
    for (TimeStep t = w.first; t <= w.last; ++t) relax_step(t);
  } else {
    for (TimeStep t : active) {
      if (!w.contains(t)) throw RangeError("active step outside the window");
      relax_step(t);
    }
  }
  return table;
}

Journey extract_journey(const LabelTable& table, VertexId v, TimeStep t) {
  std::int32_t len = table.label(v, t);
  if (len == kUnreachable) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " unreachable from " +
                            std::to_string(table.source()) + " by time " +
                            std::to_string(t));
  }
  Journey j;
  j.start = table.source();
  std::vector<JourneyStep> rev;
  VertexId at = v;
  TimeStep limit = t;
  while (at != table.source()) {
    const auto& ds = table.drops(at);
    auto it = std::upper_bound(
        ds.begin(), ds.end(), limit,
        [](TimeStep lhs, const LabelTable::Drop& d) { return lhs < d.t; });
    const auto& d = *std::prev(it);
    rev.push_back({d.t, d.from, at});
    at = d.from;
    limit = d.t - 1;
  }
  j.steps.assign(rev.rbegin(), rev.rend());
  return j;
}

Journey foremost_journey(const TemporalGraph& g, VertexId u, VertexId v,
                         TimeStep t_start) {
  const int n = g.n();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw RangeError("vertex out of range");
  }
  if (t_start < 1 || t_start > g.lifetime() - n + 2) {
    throw RangeError("start time " + std::to_string(t_start) +
                     " outside [1," + std::to_string(g.lifetime() - n + 2) +
                     "] (needs n-1 steps of lifetime left)");
  }
  if (u == v) return Journey{u, {}};

  TimeWindow w{t_start, std::min<TimeStep>(g.lifetime(), t_start + n - 2)};
  LabelTable table = min_edge_labels(g, u, w);
  auto arrival = table.first_reached(v);
  if (!arrival) {
    throw InternalGuaranteeError(
        "no journey " + std::to_string(u) + "->" + std::to_string(v) +
        " within n-1 steps from t=" + std::to_string(t_start) +
        "; the graph is not constantly connected");
  }
  return extract_journey(table, v, *arrival);
}

std::vector<VertexId> snapshot_bounded_reach(const StaticGraph& s, VertexId u,
                                             double k) {
  if (u < 0 || u >= s.n()) throw RangeError("vertex out of range");
  if (k < 0) throw RangeError("hop bound must be >= 0");
  int hops = static_cast<int>(std::floor(k));

  auto adj = s.adjacency();
  std::vector<int> dist(s.n(), -1);
  dist[u] = 0;
  std::queue<VertexId> queue;
  queue.push(u);
  std::vector<VertexId> reached = {u};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    if (dist[x] == hops) continue;
    for (VertexId y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        reached.push_back(y);
        queue.push(y);
      }
    }
  }
  std::sort(reached.begin(), reached.end());
  return reached;
}

Journey journey_from_recurring_paths(const TemporalGraph& g, VertexId u,
                                     VertexId v, double k) {
  const int n = g.n();
  if (u < 0 || u >= n || v < 0 || v >= n) throw RangeError("vertex out of range");
  if (u == v) throw PreconditionError("endpoints must be distinct");
  if (k < 1 || k >= n) {
    throw PreconditionError("hop bound k must satisfy 1 <= k < n");
  }
  int hops = static_cast<int>(std::floor(k));

  std::vector<TimeStep> qualifying;
  for (TimeStep t = 1; t <= g.lifetime(); ++t) {
    StaticGraph snap(n, g.snapshot(t));
    auto reach = snapshot_bounded_reach(snap, u, k);
    if (std::binary_search(reach.begin(), reach.end(), v)) {
      qualifying.push_back(t);
    }
  }
  auto needed =
      static_cast<std::int64_t>(std::ceil(k * static_cast<double>(n)));
  if (static_cast<std::int64_t>(qualifying.size()) < needed) {
    throw PreconditionError(
        "only " + std::to_string(qualifying.size()) +
        " snapshots contain a path of <= " + std::to_string(hops) +
        " edges between " + std::to_string(u) + " and " + std::to_string(v) +
        ", need " + std::to_string(needed));
  }

  LabelTable table = min_edge_labels(g, u, g.full_window(), qualifying);
  auto done = table.first_reached(v, hops);
  if (!done) {
    throw InternalGuaranteeError(
        "relaxation over " + std::to_string(qualifying.size()) +
        " qualifying snapshots did not produce a journey of <= " +
        std::to_string(hops) + " edges; this is a bug");
  }
  return extract_journey(table, v, *done);
}

}  // namespace tempex
