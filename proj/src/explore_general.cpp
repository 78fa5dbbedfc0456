#include "tempex/explore_general.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "tempex/intmath.hpp"
#include "tempex/reachability.hpp"

namespace tempex {

namespace {

// floor(|S| * sqrt(q/n)) in exact integer arithmetic.
std::int64_t floor_size_sqrt_ratio(std::int64_t size, int q, int n) {
  return floor_sqrt_ratio(size * size * q, n);
}

void check_chain_preconditions(const TemporalGraph& g,
                               const std::vector<VertexId>& S, int q,
                               TimeStep offset, TimeStep budget) {
  const auto n = static_cast<std::int64_t>(g.n());
  if (q < 1) throw PreconditionError("q must be a positive integer");
  if (4 * q >= n) {
    throw PreconditionError("q must satisfy q < n/4 so that k = 2*sqrt(nq) < n");
  }
  if (S.empty()) throw PreconditionError("S must be nonempty");
  for (VertexId v : S) {
    if (v < 0 || v >= n) throw RangeError("vertex in S out of range");
  }
  if (static_cast<std::int64_t>(S.size()) * q > n) {
    throw PreconditionError("|S| = " + std::to_string(S.size()) +
                            " exceeds n/q");
  }
  if (offset < 1 || offset > g.lifetime()) {
    throw RangeError("offset outside the lifetime");
  }
  if (g.lifetime() - offset + 1 < budget) {
    throw PreconditionError(
        "remaining lifetime " + std::to_string(g.lifetime() - offset + 1) +
        " below the required budget " + std::to_string(budget));
  }
}

std::vector<VertexId> sorted_unique(std::span<const VertexId> xs) {
  std::vector<VertexId> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

namespace {

// Beyond n = 200 the n^3.5 budgets stop fitting a TimeStep (and 144*n^7
// would overflow int64 well before that matters).
void check_budget_range(int n, int q) {
  if (n < 2 || n > 200) {
    throw RangeError("budget formulas support 2 <= n <= 200, got n = " +
                     std::to_string(n));
  }
  if (q < 1) throw RangeError("q must be a positive integer");
}

}  // namespace

TimeStep chain_budget(int n, int q) {
  check_budget_range(n, q);
  return static_cast<TimeStep>(ceil_div(5 * ipow(n, 3), q));
}

TimeStep half_visit_budget(int n, int q) {
  check_budget_range(n, q);
  // ceil(6 n^3.5 / q^1.5) = ceil(sqrt(36 n^7 / q^3))
  return static_cast<TimeStep>(ceil_sqrt_ratio(36 * ipow(n, 7), ipow(q, 3)));
}

TimeStep general_required_lifetime(int n) {
  check_budget_range(n, 1);
  // ceil(12 n^3.5) + 4n
  return static_cast<TimeStep>(ceil_sqrt_ratio(144 * ipow(n, 7), 1) + 4 * n);
}

std::string chain_plan_to_json(const ChainPlan& plan) {
  nlohmann::ordered_json doc;
  doc["q"] = plan.q;
  doc["k"] = plan.k;
  doc["window_length"] = plan.window_length;
  doc["parts"] = plan.parts;
  auto windows = nlohmann::ordered_json::array();
  for (const auto& w : plan.windows) {
    windows.push_back({{"first", w.first}, {"last", w.last}});
  }
  doc["windows"] = std::move(windows);
  doc["chain"] = plan.chain;
  auto links = nlohmann::ordered_json::array();
  for (const auto& link : plan.links) {
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : link.steps) {
      steps.push_back({{"t", s.t}, {"from", s.from}, {"to", s.to}});
    }
    links.push_back({{"start", link.start}, {"steps", std::move(steps)}});
  }
  doc["links"] = std::move(links);
  return doc.dump();
}

ChainResult chain_journey(const TemporalGraph& g, std::span<const VertexId> S,
                          int q, TimeStep offset) {
  const auto n = static_cast<std::int64_t>(g.n());
  auto universe = sorted_unique(S);
  const TimeStep budget = chain_budget(g.n(), q);
  check_chain_preconditions(g, universe, q, offset, budget);

  ChainPlan plan;
  plan.q = q;
  plan.k = 2.0 * std::sqrt(static_cast<double>(n) * q);
  // C = 4*ceil(n^2.5/sqrt(q)); parts l = floor(|S|*sqrt(q/n)) + 1.
  plan.window_length =
      static_cast<TimeStep>(4 * ceil_sqrt_ratio(ipow(n, 5), q));
  const auto parts =
      floor_size_sqrt_ratio(static_cast<std::int64_t>(universe.size()), q,
                            g.n()) +
      1;

  // Every window must fit inside the budget; that is the (l-1)*C <= 5n^3/q
  // accounting, which holds whenever the preconditions do.
  if ((parts - 1) * plan.window_length > budget) {
    throw InternalGuaranteeError("chain windows exceed the stated budget");
  }

  std::vector<VertexId> residue = universe;
  std::vector<JourneyFreeSet> sets;
  for (std::int64_t i = 0; i + 1 < parts; ++i) {
    TimeWindow w{offset + static_cast<TimeStep>(i) * plan.window_length,
                 offset + static_cast<TimeStep>(i + 1) * plan.window_length - 1};
    JourneyFreeSet part = journey_free_set(g, residue, plan.k, w);
    if (part.members.empty() ||
        static_cast<std::int64_t>(part.members.size()) *
                static_cast<std::int64_t>(part.members.size()) * q >=
            n) {
      throw InternalGuaranteeError(
          "conflict-free part size escapes (0, sqrt(n/q)); this is a bug");
    }
    std::vector<VertexId> rest;
    std::set_difference(residue.begin(), residue.end(), part.members.begin(),
                        part.members.end(), std::back_inserter(rest));
    plan.parts.push_back(part.members);
    plan.windows.push_back(w);
    sets.push_back(std::move(part));
    residue = std::move(rest);
  }
  if (residue.empty()) {
    throw InternalGuaranteeError("chain ran out of residue vertices");
  }
  plan.parts.push_back(residue);

  // Back-chain: pick the lowest-id vertex of the last part, then follow the
  // covering witnesses backwards; concatenate the links forward.
  plan.chain.assign(static_cast<std::size_t>(parts), 0);
  plan.chain.back() = residue.front();
  for (std::int64_t i = parts - 2; i >= 0; --i) {
    const auto& witnesses = sets[static_cast<std::size_t>(i)].witnesses;
    auto it = witnesses.find(plan.chain[static_cast<std::size_t>(i) + 1]);
    if (it == witnesses.end() || !it->second.member_to_outsider) {
      throw InternalGuaranteeError(
          "missing covering witness for a chain link; this is a bug");
    }
    plan.chain[static_cast<std::size_t>(i)] = it->second.member;
    plan.links.push_back(*it->second.member_to_outsider);
  }
  std::reverse(plan.links.begin(), plan.links.end());

  ChainResult result;
  result.journey.start = plan.chain.front();
  for (const auto& link : plan.links) append_journey(result.journey, link);
  if (result.journey.length() > 2 * g.n()) {
    throw InternalGuaranteeError("chain journey traversed " +
                                 std::to_string(result.journey.length()) +
                                 " edges, over the 2n bound; this is a bug");
  }
  result.plan = std::move(plan);
  return result;
}

HalfVisitResult half_visit_journey(const TemporalGraph& g, VertexId s,
                                   std::span<const VertexId> S, int q,
                                   TimeStep offset) {
  const int n = g.n();
  if (s < 0 || s >= n) throw RangeError("start vertex out of range");
  auto universe = sorted_unique(S);
  const TimeStep budget = half_visit_budget(n, q);
  check_chain_preconditions(g, universe, q, offset, budget);

  const auto need =
      static_cast<std::int64_t>((universe.size() + 1) / 2);  // ceil(|S|/2)

  HalfVisitResult result;
  result.journey.start = s;
  std::vector<bool> in_residue(n, false);
  for (VertexId v : universe) in_residue[v] = true;
  std::int64_t visited_in_s = 0;
  std::vector<VertexId> residue = universe;
  if (in_residue[s]) {
    in_residue[s] = false;
    residue.erase(std::find(residue.begin(), residue.end(), s));
    ++visited_in_s;
  }

  VertexId cur = s;
  TimeStep t = offset;
  auto absorb = [&](const Journey& j) {
    for (const auto& step : j.steps) {
      if (in_residue[step.to]) {
        in_residue[step.to] = false;
        residue.erase(std::find(residue.begin(), residue.end(), step.to));
        ++visited_in_s;
      }
    }
  };

  // Chains while a chain would link at least two vertices, i.e. while
  // floor(|residue| * sqrt(q/n)) >= 1.
  while (visited_in_s < need &&
         floor_size_sqrt_ratio(static_cast<std::int64_t>(residue.size()), q,
                               n) >= 1) {
    TimeStep window_start = t + (n - 1);
    ChainResult chain = chain_journey(g, residue, q, window_start);
    Journey connector = foremost_journey(g, cur, chain.journey.start, t);
    absorb(connector);
    if (in_residue[chain.journey.start]) {
      in_residue[chain.journey.start] = false;
      residue.erase(
          std::find(residue.begin(), residue.end(), chain.journey.start));
      ++visited_in_s;
    }
    absorb(chain.journey);
    append_journey(result.journey, connector);
    append_journey(result.journey, chain.journey);
    result.segments.push_back(
        {HalfVisitSegment::Kind::kConnector, std::move(connector)});
    result.segments.push_back(
        {HalfVisitSegment::Kind::kChain, std::move(chain.journey)});
    cur = result.journey.end();
    t = window_start + chain_budget(n, q);
  }

  // Leftovers one foremost journey each.
  while (visited_in_s < need) {
    VertexId target = residue.front();
    Journey leg = foremost_journey(g, cur, target, t);
    absorb(leg);
    if (in_residue[target]) {
      throw InternalGuaranteeError("pickup leg missed its own target");
    }
    append_journey(result.journey, leg);
    result.segments.push_back(
        {HalfVisitSegment::Kind::kConnector, std::move(leg)});
    cur = target;
    t += n - 1;
  }

  if (t - offset > budget) {
    throw InternalGuaranteeError("half-visit consumed " +
                                 std::to_string(t - offset) +
                                 " time steps, over its budget of " +
                                 std::to_string(budget));
  }
  // Edge bound 4*n^1.5/sqrt(q), exactly: edges^2 * q <= 16 n^3.
  const auto edges = static_cast<std::int64_t>(result.journey.length());
  if (edges * edges * q > 16 * ipow(n, 3)) {
    throw InternalGuaranteeError(
        "half-visit traversed " + std::to_string(edges) +
        " edges, over the 4*n^1.5/sqrt(q) bound; this is a bug");
  }
  return result;
}

ExplorationReport explore_general(const TemporalGraph& g, VertexId s,
                                  GeneralTrace* trace) {
  const int n = g.n();
  if (s < 0 || s >= n) throw RangeError("start vertex out of range");
  const TimeStep required = general_required_lifetime(n);
  if (g.lifetime() < required) {
    throw PreconditionError(
        "general exploration needs lifetime >= 12n^3.5 + 4n = " +
        std::to_string(required) + ", got " + std::to_string(g.lifetime()));
  }
  if (n <= 5) {
    // q < n/4 has no positive integer solution; the halving loop would
    // treat every vertex as a straggler anyway.
    ExplorationReport report = explore_baseline(g, s);
    report.algorithm = "general";
    if (trace) trace->ledger_end = report.stats.arrival + 1;
    return report;
  }

  Journey journey;
  journey.start = s;
  std::vector<bool> visited(n, false);
  visited[s] = true;
  int visited_count = 1;
  VertexId cur = s;
  TimeStep t = 1;

  auto absorb = [&](const Journey& j) {
    for (const auto& step : j.steps) {
      if (!visited[step.to]) {
        visited[step.to] = true;
        ++visited_count;
      }
    }
  };
  auto unvisited = [&]() {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[v]) out.push_back(v);
    }
    return out;
  };

  while (n - visited_count > 4) {
    std::vector<VertexId> S = unvisited();
    const int q = std::max<int>(1, n / static_cast<int>(S.size()));
    const TimeStep budget = half_visit_budget(n, q);
    HalfVisitResult half = half_visit_journey(g, cur, S, q, t);
    absorb(half.journey);
    append_journey(journey, half.journey);
    cur = journey.end();

    std::size_t still = 0;
    for (VertexId v : S) {
      if (!visited[v]) ++still;
    }
    if (2 * still > S.size()) {
      throw InternalGuaranteeError("halving failed: " + std::to_string(still) +
                                   " of " + std::to_string(S.size()) +
                                   " still unvisited");
    }
    if (trace) {
      trace->rounds.push_back({S.size(), still, q, t, budget});
    }
    t += budget;
  }

  while (visited_count < n) {
    VertexId target = unvisited().front();
    Journey leg = foremost_journey(g, cur, target, t);
    absorb(leg);
    append_journey(journey, leg);
    cur = target;
    t += n - 1;
  }
  if (trace) trace->ledger_end = t;

  return make_report(g, std::move(journey), "general");
}

ExplorationReport explore_baseline(const TemporalGraph& g, VertexId s) {
  const int n = g.n();
  if (s < 0 || s >= n) throw RangeError("start vertex out of range");
  const auto required = static_cast<std::int64_t>(n - 1) * (n - 1) + 1;
  if (g.lifetime() < required) {
    throw PreconditionError("baseline exploration needs lifetime >= (n-1)^2+1 = " +
                            std::to_string(required) + ", got " +
                            std::to_string(g.lifetime()));
  }

  Journey journey;
  journey.start = s;
  std::vector<bool> visited(n, false);
  visited[s] = true;
  int visited_count = 1;
  TimeStep t = 1;

  while (visited_count < n) {
    // Greedy leg: earliest-reachable unvisited vertex, then fewest edges.
    LabelTable table = min_edge_labels(
        g, journey.end(),
        {t, std::min<TimeStep>(g.lifetime(), t + n - 2)});
    VertexId target = -1;
    TimeStep target_arrival = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (visited[v]) continue;
      auto arrival = table.first_reached(v);
      if (!arrival) {
        throw InternalGuaranteeError(
            "unvisited vertex unreachable within n-1 steps; the graph is "
            "not constantly connected");
      }
      if (target < 0 || *arrival < target_arrival) {
        target = v;
        target_arrival = *arrival;
      }
    }
    Journey leg = extract_journey(table, target, target_arrival);
    for (const auto& step : leg.steps) {
      if (!visited[step.to]) {
        visited[step.to] = true;
        ++visited_count;
      }
    }
    append_journey(journey, leg);
    t = target_arrival + 1;
  }
  return make_report(g, std::move(journey), "baseline");
}

}  // namespace tempex
