#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/journey.hpp"
#include "tempex/sets.hpp"

namespace tempex {

// The general STEXP pipeline. All budgets below are the constructive
// worst-case allotments; offsets always advance by the full stated budget
// even when a journey finishes early, which keeps the time ledger
// predictable and matches the worst-case accounting the guarantees assume.

/// Time steps a chain over S with parameter q may consume:
/// ceil(5*n^3/q).
TimeStep chain_budget(int n, int q);

/// Time steps one half-visit over S with parameter q may consume:
/// ceil(6*n^3.5/q^1.5).
TimeStep half_visit_budget(int n, int q);

/// Lifetime required by explore_general: ceil(12*n^3.5) + 4n.
TimeStep general_required_lifetime(int n);

/// How a chain journey was assembled: consecutive windows of length C, one
/// conflict-free part per window, and the selected member chain with one
/// link journey per window. Serializable via chain_plan_to_json for trace
/// inspection.
struct ChainPlan {
  int q = 0;
  double k = 0;                       // 2*sqrt(n*q)
  TimeStep window_length = 0;         // C = 4*ceil(n^2.5/sqrt(q))
  std::vector<std::vector<VertexId>> parts;
  std::vector<TimeWindow> windows;    // one per part except the last
  std::vector<VertexId> chain;        // chain[i] lies in parts[i]
  std::vector<Journey> links;         // chain[i] -> chain[i+1] in windows[i]
};

std::string chain_plan_to_json(const ChainPlan& plan);

struct ChainResult {
  Journey journey;  // starts at chain.front(), visits every chain vertex
  ChainPlan plan;
};

/// Journey visiting at least |S|*sqrt(q/n) vertices of S with at most 2n
/// edges inside [offset, offset + chain_budget). Successive windows each
/// contribute one conflict-free part of the remaining S; back-chaining
/// through the covering witnesses yields the links. Requires |S|*q <= n,
/// 4q < n, and chain_budget(n,q) time steps of remaining lifetime.
ChainResult chain_journey(const TemporalGraph& g, std::span<const VertexId> S,
                          int q, TimeStep offset);

struct HalfVisitSegment {
  enum class Kind { kChain, kConnector } kind;
  Journey journey;
};

struct HalfVisitResult {
  Journey journey;  // starts at the requested vertex
  std::vector<HalfVisitSegment> segments;
};

/// Journey from s visiting at least half of S (rounded up) with at most
/// 4*n^1.5/sqrt(q) edges inside [offset, offset + half_visit_budget):
/// chain journeys over the unvisited residue, each reached by a foremost
/// connector of at most n-1 edges, then single-vertex foremost pickups for
/// the leftovers. Requires |S|*q <= n, 4q < n, and half_visit_budget(n,q)
/// remaining time steps.
HalfVisitResult half_visit_journey(const TemporalGraph& g, VertexId s,
                                   std::span<const VertexId> S, int q,
                                   TimeStep offset);

/// One halving round of explore_general, for bound assertions in tests.
struct GeneralRound {
  std::size_t unvisited_before = 0;
  std::size_t unvisited_after = 0;
  int q = 0;
  TimeStep offset = 0;
  TimeStep budget = 0;
};

struct GeneralTrace {
  std::vector<GeneralRound> rounds;
  TimeStep ledger_end = 0;  // first time step never used
};

/// Complete exploration traversing at most 16*n^1.5 + 4(n-1) edges with
/// arrival at most 12*n^3.5 + 4(n-1): repeatedly halves the unvisited set
/// via half_visit_journey (with q derived from the actual unvisited count)
/// while more than 4 vertices remain, then collects the stragglers with
/// foremost journeys. For n <= 5 the loop cannot be set up (q < n/4 has no
/// positive solution) and the baseline runs instead. Requires lifetime >=
/// general_required_lifetime(n).
ExplorationReport explore_general(const TemporalGraph& g, VertexId s,
                                  GeneralTrace* trace = nullptr);

/// Baseline exploration: one foremost journey per new vertex, greedily
/// picking the earliest-reachable unvisited target. At most (n-1)^2 edges
/// and time steps. Requires lifetime >= (n-1)^2 + 1.
ExplorationReport explore_baseline(const TemporalGraph& g, VertexId s);

}  // namespace tempex
