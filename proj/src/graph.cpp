#include "tempex/graph.hpp"

#include <algorithm>
#include <numeric>

namespace tempex {

namespace {

void check_vertex_range(VertexId id, int n, const char* what) {
  if (id < 0 || id >= n) {
    throw ValidationError(std::string(what) + " id " + std::to_string(id) +
                          " out of range [0," + std::to_string(n - 1) + "]");
  }
}

std::vector<Edge> normalize_edges(int n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    check_vertex_range(e.u, n, "edge endpoint");
    check_vertex_range(e.v, n, "edge endpoint");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// Union-find over one edge set; enough for per-snapshot connectivity.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool edges_connect_all(int n, const std::vector<Edge>& edges) {
  Dsu dsu(n);
  for (const auto& e : edges) dsu.unite(e.u, e.v);
  int root = dsu.find(0);
  for (int v = 1; v < n; ++v) {
    if (dsu.find(v) != root) return false;
  }
  return true;
}

}  // namespace

Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

StaticGraph::StaticGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw ValidationError("static graph needs n >= 1");
  edges_ = normalize_edges(n, std::move(edges));
}

bool StaticGraph::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<VertexId>> StaticGraph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool StaticGraph::is_connected() const {
  if (n_ == 1) return true;
  return edges_connect_all(n_, edges_);
}

TemporalGraph::TemporalGraph(int n, std::vector<std::vector<Edge>> snapshots,
                             std::optional<VertexId> start)
    : n_(n), start_(start) {
  if (n < 2) throw ValidationError("temporal graph needs n >= 2");
  if (snapshots.empty()) throw ValidationError("temporal graph needs L >= 1");
  if (start) check_vertex_range(*start, n, "start vertex");
  snapshots_.reserve(snapshots.size());
  for (auto& snap : snapshots) {
    snapshots_.push_back(normalize_edges(n, std::move(snap)));
  }
}

const std::vector<Edge>& TemporalGraph::snapshot(TimeStep t) const {
  if (t < 1 || t > lifetime()) {
    throw RangeError("time step " + std::to_string(t) + " outside [1," +
                     std::to_string(lifetime()) + "]");
  }
  return snapshots_[static_cast<std::size_t>(t) - 1];
}

bool TemporalGraph::has_edge(TimeStep t, VertexId a, VertexId b) const {
  if (a == b) return false;
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  const auto& snap = snapshot(t);
  return std::binary_search(snap.begin(), snap.end(), e);
}

StaticGraph TemporalGraph::underlying_graph() const {
  std::vector<Edge> all;
  for (const auto& snap : snapshots_) {
    all.insert(all.end(), snap.begin(), snap.end());
  }
  return StaticGraph(n_, std::move(all));
}

TemporalGraph TemporalGraph::window(TimeStep a, TimeStep b) const {
  if (a < 1 || b > lifetime() || a > b) {
    throw RangeError("window [" + std::to_string(a) + "," + std::to_string(b) +
                     "] outside [1," + std::to_string(lifetime()) + "]");
  }
  std::vector<std::vector<Edge>> snaps(snapshots_.begin() + (a - 1),
                                       snapshots_.begin() + b);
  return TemporalGraph(n_, std::move(snaps), start_);
}

ValidationReport validate(const TemporalGraph& g) {
  ValidationReport report;
  for (TimeStep t = 1; t <= g.lifetime(); ++t) {
    if (!edges_connect_all(g.n(), g.snapshot(t))) {
      report.push_back(
          {"snapshot " + std::to_string(t) + " disconnected", t});
    }
  }
  return report;
}

bool is_constantly_connected(const TemporalGraph& g) {
  return validate(g).empty();
}

}  // namespace tempex
