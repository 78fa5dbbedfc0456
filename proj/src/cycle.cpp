#include "tempex/cycle.hpp"

#include <algorithm>
#include <optional>

#include "tempex/reachability.hpp"

namespace tempex {

namespace {

std::vector<VertexId> unblocked_for_layout(const CycleLayout& layout,
                                           const TemporalGraph& g, TimeStep t,
                                           Rotation dir) {
  const int n = layout.n();
  if (t < 1 || t > g.lifetime() - n + 2) {
    throw RangeError("start time " + std::to_string(t) + " outside [1," +
                     std::to_string(g.lifetime() - n + 2) + "]");
  }
  std::vector<VertexId> starts;
  for (int p = 0; p < n; ++p) {
    VertexId pos = layout.order[p];
    bool blocked = false;
    for (int j = 0; j < n - 1 && !blocked; ++j) {
      VertexId nxt = layout.neighbor(pos, dir);
      if (!g.has_edge(t + j, pos, nxt)) blocked = true;
      pos = nxt;
    }
    if (!blocked) starts.push_back(layout.order[p]);
  }
  if (starts.empty()) {
    throw InternalGuaranteeError(
        "no unblocked start at t = " + std::to_string(t) +
        "; a constantly connected cycle always has one");
  }
  std::sort(starts.begin(), starts.end());
  return starts;
}

// Directional walk with waits, arrival required by `deadline`.
std::optional<Journey> directional_walk(const CycleLayout& layout,
                                        const TemporalGraph& g, VertexId from,
                                        VertexId to, Rotation dir,
                                        TimeStep t_start, TimeStep deadline) {
  Journey j;
  j.start = from;
  VertexId pos = from;
  for (TimeStep t = t_start; pos != to; ++t) {
    if (t > deadline) return std::nullopt;
    VertexId nxt = layout.neighbor(pos, dir);
    if (g.has_edge(t, pos, nxt)) {
      j.steps.push_back({t, pos, nxt});
      pos = nxt;
    }
  }
  return j;
}

// Sweep in one direction from `from` starting at time t_start until every
// vertex of `visited` is set; the caller guarantees n-1 unblocked steps.
void sweep_until_complete(const CycleLayout& layout, const TemporalGraph& g,
                          Journey& journey, std::vector<bool>& visited,
                          int& visited_count, Rotation dir, TimeStep t_start) {
  const int n = layout.n();
  VertexId pos = journey.end();
  for (int j = 0; j < n - 1 && visited_count < n; ++j) {
    VertexId nxt = layout.neighbor(pos, dir);
    TimeStep t = t_start + j;
    if (!g.has_edge(t, pos, nxt)) {
      throw InternalGuaranteeError("sweep met an absent edge at t = " +
                                   std::to_string(t) +
                                   " despite an unblocked start");
    }
    journey.steps.push_back({t, pos, nxt});
    if (!visited[nxt]) {
      visited[nxt] = true;
      ++visited_count;
    }
    pos = nxt;
  }
  if (visited_count < n) {
    throw InternalGuaranteeError("sweep of n-1 steps left vertices unvisited");
  }
}

void mark_journey(const Journey& j, std::vector<bool>& visited,
                  int& visited_count) {
  if (!visited[j.start]) {
    visited[j.start] = true;
    ++visited_count;
  }
  for (const auto& s : j.steps) {
    if (!visited[s.to]) {
      visited[s.to] = true;
      ++visited_count;
    }
  }
}

}  // namespace

VertexId CycleLayout::neighbor(VertexId v, Rotation dir) const {
  int p = position[v];
  return dir == Rotation::kClockwise ? at(p + 1) : at(p - 1);
}

int CycleLayout::distance(VertexId from, VertexId to, Rotation dir) const {
  int d = position[to] - position[from];
  int m = n();
  d = ((d % m) + m) % m;
  return dir == Rotation::kClockwise ? d : (m - d) % m;
}

CycleLayout as_cycle(const TemporalGraph& g, VertexId s) {
  const int n = g.n();
  if (s < 0 || s >= n) throw RangeError("start vertex out of range");
  if (n < 3) throw ShapeError("a cycle needs n >= 3");
  StaticGraph underlying = g.underlying_graph();
  auto adj = underlying.adjacency();

  // A temporal cycle may leave one cycle edge permanently absent, in which
  // case the union of the snapshots is a Hamiltonian path; the missing edge
  // is then the one closing it. Anything else is not a cycle.
  std::vector<VertexId> endpoints;
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() == 1) {
      endpoints.push_back(v);
    } else if (adj[v].size() != 2) {
      throw ShapeError("underlying graph is not a cycle: vertex " +
                       std::to_string(v) + " has degree " +
                       std::to_string(adj[v].size()));
    }
  }
  if (endpoints.size() == 2) {
    adj[endpoints[0]].push_back(endpoints[1]);
    adj[endpoints[1]].push_back(endpoints[0]);
  } else if (!endpoints.empty()) {
    throw ShapeError("underlying graph is not a cycle: " +
                     std::to_string(endpoints.size()) +
                     " vertices of degree 1");
  }

  CycleLayout layout;
  layout.s = s;
  layout.order.reserve(n);
  layout.order.push_back(s);
  layout.order.push_back(std::min(adj[s][0], adj[s][1]));
  while (static_cast<int>(layout.order.size()) < n) {
    VertexId cur = layout.order.back();
    VertexId prev = layout.order[layout.order.size() - 2];
    VertexId nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    if (nxt == s) break;
    layout.order.push_back(nxt);
  }
  if (static_cast<int>(layout.order.size()) < n) {
    // Degree-2 everywhere plus a short closed walk means disjoint cycles.
    throw ShapeError("underlying graph is a union of disjoint cycles");
  }

  layout.position.assign(n, 0);
  for (int p = 0; p < n; ++p) layout.position[layout.order[p]] = p;
  int left = (n - 1) / 2;
  layout.antipodal = make_edge(layout.order[left], layout.order[left + 1]);
  return layout;
}

std::vector<VertexId> unblocked_starts(const TemporalGraph& g, TimeStep t,
                                       Rotation dir) {
  CycleLayout layout = as_cycle(g, 0);
  return unblocked_for_layout(layout, g, t, dir);
}

ExplorationReport explore_cycle(const TemporalGraph& g, VertexId s) {
  CycleLayout layout = as_cycle(g, s);
  const int n = g.n();
  if (g.lifetime() < 2 * n - 2) {
    throw PreconditionError("cycle exploration needs lifetime >= 2n-2 = " +
                            std::to_string(2 * n - 2));
  }
  const int bound = 3 * (n - 1) / 2;

  // Arrival times from s for picking among unblocked starts; the foremost
  // journey from s reaches everything by time n-1.
  LabelTable from_s = min_edge_labels(g, s, {1, static_cast<TimeStep>(n - 1)});
  auto pick = [&](const std::vector<VertexId>& candidates) {
    VertexId best = -1;
    TimeStep best_arrival = 0;
    for (VertexId v : candidates) {
      TimeStep arrival = 0;
      if (v != s) {
        auto t = from_s.first_reached(v);
        if (!t) {
          throw InternalGuaranteeError(
              "vertex unreachable within n-1 steps on a connected cycle");
        }
        arrival = *t;
      }
      if (best < 0 || arrival < best_arrival) {
        best = v;
        best_arrival = arrival;
      }
    }
    return best;
  };

  // Clockwise run: foremost journey to an unblocked start, then sweep.
  VertexId s_h = pick(unblocked_for_layout(layout, g, n, Rotation::kClockwise));
  Journey run1;
  std::vector<bool> visited1(n, false);
  int count1 = 0;
  {
    run1 = s_h == s ? Journey{s, {}} : foremost_journey(g, s, s_h, 1);
    mark_journey(run1, visited1, count1);
    sweep_until_complete(layout, g, run1, visited1, count1,
                         Rotation::kClockwise, static_cast<TimeStep>(n));
  }
  if (run1.length() <= bound) {
    return make_report(g, std::move(run1), "cycle");
  }

  // Counter-clockwise run. The approach honors the tie rule: when both
  // directional journeys fit in the first n-1 steps, take the counter-
  // clockwise one.
  VertexId s_a =
      pick(unblocked_for_layout(layout, g, n, Rotation::kCounterClockwise));
  Journey run2;
  std::vector<bool> visited2(n, false);
  int count2 = 0;
  {
    auto deadline = static_cast<TimeStep>(n - 1);
    auto approach = directional_walk(layout, g, s, s_a,
                                     Rotation::kCounterClockwise, 1, deadline);
    if (!approach) {
      approach =
          directional_walk(layout, g, s, s_a, Rotation::kClockwise, 1, deadline);
    }
    if (!approach) {
      throw InternalGuaranteeError(
          "neither directional approach reaches the counter-clockwise start "
          "within n-1 steps; contradicts reachability on connected cycles");
    }
    run2 = std::move(*approach);
    mark_journey(run2, visited2, count2);
    sweep_until_complete(layout, g, run2, visited2, count2,
                         Rotation::kCounterClockwise, static_cast<TimeStep>(n));
  }
  if (run2.length() > bound) {
    throw InternalGuaranteeError(
        "both directional runs exceed floor(3(n-1)/2) edges; this is a bug");
  }
  return make_report(g, std::move(run2), "cycle");
}

TemporalGraph gen_cycle_missing_m(int n, TimeStep lifetime) {
  if (n < 3) throw RangeError("cycle families need n >= 3");
  if (lifetime < 2 * n - 2) {
    throw RangeError("missing-antipode family needs lifetime >= 2n-2");
  }
  Edge m = make_edge((n - 1) / 2, (n - 1) / 2 + 1);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    Edge e = make_edge(i, (i + 1) % n);
    if (e != m) edges.push_back(e);
  }
  std::vector<std::vector<Edge>> snaps(static_cast<std::size_t>(lifetime),
                                       edges);
  return TemporalGraph(n, std::move(snaps), 0);
}

TemporalGraph gen_cycle_tight(int n) {
  if (n < 3) throw RangeError("cycle families need n >= 3");
  const TimeStep lifetime = 2 * n - 3;
  std::vector<std::vector<Edge>> snaps;
  snaps.reserve(lifetime);
  for (TimeStep t = 1; t <= lifetime; ++t) {
    Edge absent = t <= n - 2 ? Edge{0, 1} : Edge{1, 2};
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      Edge e = make_edge(i, (i + 1) % n);
      if (e != absent) edges.push_back(e);
    }
    snaps.push_back(std::move(edges));
  }
  return TemporalGraph(n, std::move(snaps), 0);
}

}  // namespace tempex
