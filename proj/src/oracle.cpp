#include "tempex/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "tempex/reachability.hpp"

namespace tempex {

namespace {

constexpr std::uint64_t kDefaultStateBudget = 50'000'000;

using Dist = std::int32_t;
constexpr Dist kInf = std::numeric_limits<Dist>::max();

// One DP layer: dist[mask * n + v] = fewest edges of a journey from the
// start that sits on v at this time step having visited exactly `mask`.
struct Layers {
  const TemporalGraph& g;
  int n;
  std::size_t states;
  TimeStep stride;  // checkpoint spacing; 1 = every layer stored
  std::vector<std::vector<Dist>> stored;

  Layers(const TemporalGraph& g_, VertexId s, std::uint64_t budget)
      : g(g_), n(g_.n()), states(std::size_t(1) << n) {
    states *= static_cast<std::size_t>(n);
    const auto layers = static_cast<std::uint64_t>(g.lifetime()) + 1;
    stride = 1;
    if (layers * states > budget) {
      stride = static_cast<TimeStep>((layers * states + budget / 2 - 1) /
                                     (budget / 2));
    }
    std::vector<Dist> base(states, kInf);
    base[index(std::size_t(1) << s, s)] = 0;
    stored.push_back(std::move(base));
  }

  std::size_t index(std::size_t mask, VertexId v) const {
    return mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
  }

  // Relaxes one time step: stay transitions carry, edge transitions read prev.
  void advance(const std::vector<Dist>& prev, std::vector<Dist>& cur,
               TimeStep t) const {
    cur = prev;
    const std::size_t masks = std::size_t(1) << n;
    for (const auto& e : g.snapshot(t)) {
      for (std::size_t mask = 0; mask < masks; ++mask) {
        Dist du = prev[index(mask, e.u)];
        if (du != kInf) {
          std::size_t to = index(mask | (std::size_t(1) << e.v), e.v);
          if (du + 1 < cur[to]) cur[to] = du + 1;
        }
        Dist dv = prev[index(mask, e.v)];
        if (dv != kInf) {
          std::size_t to = index(mask | (std::size_t(1) << e.u), e.u);
          if (dv + 1 < cur[to]) cur[to] = dv + 1;
        }
      }
    }
  }

  void push(const std::vector<Dist>& layer, TimeStep t) {
    if (t % stride == 0) stored.push_back(layer);
  }

  // Layer at time t (0 = initial). Recomputes from the nearest checkpoint
  // when the spacing dropped layers; only large instances pay that cost.
  std::vector<Dist> layer_at(TimeStep t) const {
    TimeStep cp = t / stride;
    std::vector<Dist> cur = stored[static_cast<std::size_t>(cp)];
    std::vector<Dist> next;
    for (TimeStep step = cp * stride + 1; step <= t; ++step) {
      advance(cur, next, step);
      cur.swap(next);
    }
    return cur;
  }
};

std::uint8_t sat_add(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>(std::min<int>(2, a + b));
}

}  // namespace

std::uint64_t oracle_state_budget() {
  if (const char* env = std::getenv("TEMPEX_ORACLE_STATE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultStateBudget;
}

OracleResult optimal_exploration(const TemporalGraph& g, VertexId s,
                                 Objective objective, bool count_unique,
                                 std::uint64_t state_budget) {
  const int n = g.n();
  if (s < 0 || s >= n) throw RangeError("start vertex out of range");
  if (n > 20) {
    throw CapacityError("oracle limited to n <= 20, got n = " +
                        std::to_string(n));
  }
  std::uint64_t budget = state_budget ? state_budget : oracle_state_budget();
  const std::uint64_t per_layer =
      (std::uint64_t(1) << n) * static_cast<std::uint64_t>(n);
  if (2 * per_layer > budget) {
    throw CapacityError("oracle needs " + std::to_string(2 * per_layer) +
                        " states, budget is " + std::to_string(budget));
  }

  const std::size_t full = (std::size_t(1) << n) - 1;
  Layers layers(g, s, budget);

  auto full_best = [&](const std::vector<Dist>& layer, VertexId* who) {
    Dist best = kInf;
    for (VertexId v = 0; v < n; ++v) {
      Dist d = layer[layers.index(full, v)];
      if (d < best) {
        best = d;
        if (who) *who = v;
      }
    }
    return best;
  };

  OracleResult result;
  Dist best_seen = kInf;
  TimeStep best_edges_t = 0;
  VertexId best_edges_v = 0;
  TimeStep first_full_t = 0;
  VertexId first_full_v = 0;

  {
    std::vector<Dist> prev = layers.stored.front();
    std::vector<Dist> cur;
    for (TimeStep t = 1; t <= g.lifetime(); ++t) {
      layers.advance(prev, cur, t);
      VertexId who = 0;
      Dist b = full_best(cur, &who);
      if (b < best_seen) {
        best_seen = b;
        best_edges_t = t;
        best_edges_v = who;
        if (first_full_t == 0) {
          first_full_t = t;
          first_full_v = who;
        }
      }
      prev.swap(cur);
      layers.push(prev, t);  // push copies only at checkpoints
    }
  }

  if (best_seen == kInf) {
    result.feasible = false;
    return result;
  }
  result.feasible = true;
  result.best_edges = best_seen;
  result.best_arrival = first_full_t;

  // Witness end state per objective.
  TimeStep end_t = objective == Objective::kMinEdges ? best_edges_t : first_full_t;
  VertexId end_v = objective == Objective::kMinEdges ? best_edges_v : first_full_v;
  Dist end_e = objective == Objective::kMinEdges
                   ? best_seen
                   : layers.layer_at(first_full_t)[layers.index(full, first_full_v)];

  // Walk the DP backwards, preferring to stay (pushes edges early, which is
  // deterministic and keeps witnesses stable across runs).
  Journey witness;
  witness.start = s;
  {
    std::vector<JourneyStep> rev;
    std::size_t mask = full;
    VertexId at = end_v;
    Dist e = end_e;
    TimeStep t = end_t;
    std::vector<Dist> prev_layer;
    while (t > 0) {
      prev_layer = layers.layer_at(t - 1);
      if (prev_layer[layers.index(mask, at)] == e) {
        --t;
        continue;
      }
      bool found = false;
      for (const auto& edge : g.snapshot(t)) {
        VertexId x;
        if (edge.u == at) {
          x = edge.v;
        } else if (edge.v == at) {
          x = edge.u;
        } else {
          continue;
        }
        for (std::size_t m :
             {mask & ~(std::size_t(1) << at), mask}) {
          if (prev_layer[layers.index(m, x)] == e - 1) {
            rev.push_back({t, x, at});
            at = x;
            mask = m;
            --e;
            --t;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        throw InternalGuaranteeError("oracle witness reconstruction lost its "
                                     "predecessor; this is a bug");
      }
    }
    witness.steps.assign(rev.rbegin(), rev.rend());
  }
  result.witness = std::move(witness);

  if (count_unique) {
    // Second pass counting timed min-edge journeys; saturates at 2. A
    // completing journey is counted exactly once, at its final edge.
    std::vector<Dist> prev = layers.stored.front();
    std::vector<std::uint8_t> prev_ways(layers.states, 0);
    prev_ways[layers.index(std::size_t(1) << s, s)] = 1;
    std::vector<Dist> cur;
    std::vector<std::uint8_t> cur_ways;
    int completions = 0;
    const std::size_t masks = std::size_t(1) << n;
    for (TimeStep t = 1; t <= g.lifetime() && completions < 2; ++t) {
      cur = prev;
      cur_ways = prev_ways;
      for (const auto& edge : g.snapshot(t)) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
          auto move = [&](VertexId x, VertexId v) {
            Dist dx = prev[layers.index(mask, x)];
            if (dx == kInf) return;
            std::size_t to_mask = mask | (std::size_t(1) << v);
            std::size_t to = layers.index(to_mask, v);
            if (dx + 1 < cur[to]) {
              cur[to] = dx + 1;
              cur_ways[to] = prev_ways[layers.index(mask, x)];
            } else if (dx + 1 == cur[to]) {
              cur_ways[to] =
                  sat_add(cur_ways[to], prev_ways[layers.index(mask, x)]);
            }
            if (to_mask == full && mask != full && dx + 1 == best_seen) {
              completions = std::min(
                  2, completions + prev_ways[layers.index(mask, x)]);
            }
          };
          move(edge.u, edge.v);
          move(edge.v, edge.u);
        }
      }
      prev.swap(cur);
      prev_ways.swap(cur_ways);
    }
    result.unique = (completions == 1);
  }
  return result;
}

std::optional<int> journey_oracle(const TemporalGraph& g, VertexId u,
                                  VertexId v, TimeWindow window,
                                  std::uint64_t state_budget) {
  const int n = g.n();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw RangeError("vertex out of range");
  }
  if (window.first < 1 || window.last > g.lifetime() ||
      window.first > window.last) {
    throw RangeError("window outside the graph lifetime");
  }
  std::uint64_t budget = state_budget ? state_budget : oracle_state_budget();
  const auto len = static_cast<std::uint64_t>(window.length());
  if ((len + 1) * static_cast<std::uint64_t>(n) > budget) {
    throw CapacityError("journey oracle state space exceeds the budget");
  }

  // 0-1 BFS over (time index, vertex); time index i means "after step
  // window.first + i - 1", i = 0 is before the window.
  const auto idx = [n](std::uint64_t i, VertexId x) {
    return i * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(x);
  };
  std::vector<int> dist((len + 1) * n, -1);
  std::deque<std::uint64_t> queue;
  dist[idx(0, u)] = 0;
  queue.push_back(idx(0, u));
  int best = -1;
  while (!queue.empty()) {
    std::uint64_t state = queue.front();
    queue.pop_front();
    std::uint64_t i = state / n;
    auto x = static_cast<VertexId>(state % n);
    int d = dist[state];
    if (x == v && (best < 0 || d < best)) best = d;
    if (i == len) continue;
    TimeStep t = window.first + static_cast<TimeStep>(i);
    std::uint64_t stay = idx(i + 1, x);
    if (dist[stay] < 0 || d < dist[stay]) {
      dist[stay] = d;
      queue.push_front(stay);
    }
    for (const auto& e : g.snapshot(t)) {
      VertexId y;
      if (e.u == x) {
        y = e.v;
      } else if (e.v == x) {
        y = e.u;
      } else {
        continue;
      }
      std::uint64_t next = idx(i + 1, y);
      if (dist[next] < 0 || d + 1 < dist[next]) {
        dist[next] = d + 1;
        queue.push_back(next);
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace tempex
