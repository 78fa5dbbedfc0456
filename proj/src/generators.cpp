#include "tempex/generators.hpp"

#include <algorithm>
#include <numeric>

#include "tempex/cycle.hpp"
#include "tempex/explore_diameter.hpp"

namespace tempex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void check_gen_args(int n, TimeStep lifetime) {
  if (n < 2) throw RangeError("generator needs n >= 2");
  if (lifetime < 1) throw RangeError("generator needs L >= 1");
}

// Uniform spanning tree of the complete graph via a random Pruefer sequence.
std::vector<Edge> random_tree(int n, SplitRng& rng) {
  if (n == 2) return {Edge{0, 1}};
  std::vector<int> code(static_cast<std::size_t>(n) - 2);
  for (auto& c : code) c = static_cast<int>(rng.uniform(n));
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  // Standard decode: repeatedly attach the smallest leaf.
  std::vector<bool> used(n, false);
  for (int c : code) {
    int leaf = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    }
    edges.push_back(make_edge(leaf, c));
    used[leaf] = true;
    --degree[c];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
  }
  edges.push_back(make_edge(a, b));
  return edges;
}

void add_extra_edges(int n, std::vector<Edge>& edges, double probability,
                     SplitRng& rng) {
  std::vector<Edge> tree = edges;
  std::sort(tree.begin(), tree.end());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (std::binary_search(tree.begin(), tree.end(), Edge{u, v})) continue;
      if (rng.unit() < probability) edges.push_back({u, v});
    }
  }
}

}  // namespace

std::uint64_t SplitRng::next() {
  state_ = splitmix64(state_);
  return state_;
}

std::uint32_t SplitRng::uniform(std::uint32_t bound) {
  // Rejection below the largest multiple of bound keeps the draw unbiased.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::uint32_t>(x % bound);
}

double SplitRng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitRng SplitRng::for_snapshot(std::uint64_t master_seed, TimeStep t) {
  return SplitRng(splitmix64(master_seed ^
                             (static_cast<std::uint64_t>(t) *
                              0xD1B54A32D192ED03ULL)));
}

TemporalGraph gen_random_connected(int n, TimeStep lifetime, double density,
                                   std::uint64_t seed) {
  check_gen_args(n, lifetime);
  if (density < 0 || density > 1) throw RangeError("density must be in [0,1]");
  std::vector<std::vector<Edge>> snaps;
  snaps.reserve(lifetime);
  for (TimeStep t = 1; t <= lifetime; ++t) {
    SplitRng rng = SplitRng::for_snapshot(seed, t);
    auto edges = random_tree(n, rng);
    add_extra_edges(n, edges, density, rng);
    snaps.push_back(std::move(edges));
  }
  return TemporalGraph(n, std::move(snaps));
}

TemporalGraph gen_rotating_star(int n, TimeStep lifetime, std::uint64_t seed) {
  check_gen_args(n, lifetime);
  std::vector<std::vector<Edge>> snaps;
  snaps.reserve(lifetime);
  for (TimeStep t = 1; t <= lifetime; ++t) {
    SplitRng rng = SplitRng::for_snapshot(seed, t);
    auto center = static_cast<VertexId>(rng.uniform(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (v != center) edges.push_back(make_edge(center, v));
    }
    snaps.push_back(std::move(edges));
  }
  return TemporalGraph(n, std::move(snaps));
}

TemporalGraph gen_bounded_diameter(int n, TimeStep lifetime, int k,
                                   std::uint64_t seed) {
  check_gen_args(n, lifetime);
  if (k < 1 || k >= n) throw RangeError("diameter bound needs 1 <= k < n");

  constexpr int kMaxAttempts = 1000;
  constexpr double kExtraEdgeProbability = 0.2;

  std::vector<std::vector<Edge>> snaps;
  snaps.reserve(lifetime);
  for (TimeStep t = 1; t <= lifetime; ++t) {
    SplitRng rng = SplitRng::for_snapshot(seed, t);

    if (k == 1) {
      // Diameter 1 means the complete graph; nothing to sample.
      std::vector<Edge> edges;
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      snaps.push_back(std::move(edges));
      continue;
    }

    bool accepted = false;
    for (int attempt = 0; attempt < kMaxAttempts && !accepted; ++attempt) {
      // Depth ceil(k/2) trees can exceed diameter k when k is odd, hence
      // the verification; late attempts drop to floor(k/2), which always
      // passes, so the budget cannot actually run out.
      int depth_cap = attempt < kMaxAttempts / 2 ? (k + 1) / 2 : k / 2;

      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.uniform(static_cast<std::uint32_t>(i + 1))]);
      }
      std::vector<int> depth(n, 0);
      std::vector<Edge> edges;
      std::vector<int> eligible = {order[0]};  // the root never leaves
      for (int i = 1; i < n; ++i) {
        int parent =
            eligible[rng.uniform(static_cast<std::uint32_t>(eligible.size()))];
        edges.push_back(make_edge(order[i], parent));
        depth[order[i]] = depth[parent] + 1;
        if (depth[order[i]] < depth_cap) eligible.push_back(order[i]);
      }
      add_extra_edges(n, edges, kExtraEdgeProbability, rng);
      StaticGraph snap(n, edges);
      if (snapshot_diameter(snap) <= k) {
        snaps.push_back(std::move(edges));
        accepted = true;
      }
    }
    if (!accepted) {
      throw GenerationError("snapshot " + std::to_string(t) +
                            ": no diameter-" + std::to_string(k) +
                            " graph found in " + std::to_string(kMaxAttempts) +
                            " attempts");
    }
  }
  return TemporalGraph(n, std::move(snaps));
}

TemporalGraph gen_random_cycle(int n, TimeStep lifetime, std::uint64_t seed) {
  check_gen_args(n, lifetime);
  if (n < 3) throw RangeError("a cycle needs n >= 3");

  // The cycle order itself is seeded so layout extraction gets exercised.
  SplitRng order_rng(splitmix64(seed ^ 0xA24BAED4963EE407ULL));
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i],
              order[order_rng.uniform(static_cast<std::uint32_t>(i + 1))]);
  }
  std::vector<Edge> cycle_edges;
  cycle_edges.reserve(n);
  for (int i = 0; i < n; ++i) {
    cycle_edges.push_back(make_edge(order[i], order[(i + 1) % n]));
  }

  std::vector<std::vector<Edge>> snaps;
  snaps.reserve(lifetime);
  for (TimeStep t = 1; t <= lifetime; ++t) {
    SplitRng rng = SplitRng::for_snapshot(seed, t);
    // One slot per cycle edge plus "drop nothing".
    auto drop = rng.uniform(static_cast<std::uint32_t>(n + 1));
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<std::uint32_t>(i) != drop) edges.push_back(cycle_edges[i]);
    }
    snaps.push_back(std::move(edges));
  }
  return TemporalGraph(n, std::move(snaps));
}

TemporalGraph generate_instance(const GenSpec& spec) {
  if (spec.family == "random") {
    return gen_random_connected(spec.n, spec.lifetime, spec.density, spec.seed);
  }
  if (spec.family == "rotating-star") {
    return gen_rotating_star(spec.n, spec.lifetime, spec.seed);
  }
  if (spec.family == "bounded-diameter") {
    if (!spec.k) throw RangeError("bounded-diameter needs k");
    return gen_bounded_diameter(spec.n, spec.lifetime, *spec.k, spec.seed);
  }
  if (spec.family == "random-cycle") {
    return gen_random_cycle(spec.n, spec.lifetime, spec.seed);
  }
  if (spec.family == "cycle-missing-m") {
    return gen_cycle_missing_m(spec.n, spec.lifetime);
  }
  if (spec.family == "cycle-tight") {
    return gen_cycle_tight(spec.n);
  }
  throw RangeError("unknown family " + spec.family);
}

}  // namespace tempex
