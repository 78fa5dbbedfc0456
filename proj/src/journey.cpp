#include "tempex/journey.hpp"

#include <algorithm>

namespace tempex {

JourneyStats journey_stats(const Journey& j) {
  if (j.steps.empty()) return {0, 0, 0};
  TimeStep first = j.steps.front().t;
  TimeStep last = j.steps.back().t;
  return {j.length(), last, last - first + 1};
}

ValidationReport journey_check(const TemporalGraph& g, const Journey& j) {
  ValidationReport report;
  const int n = g.n();
  auto bad_vertex = [&](VertexId v) { return v < 0 || v >= n; };

  if (bad_vertex(j.start)) {
    report.push_back({"start vertex " + std::to_string(j.start) +
                          " out of range [0," + std::to_string(n - 1) + "]",
                      std::nullopt});
  }

  VertexId at = j.start;
  TimeStep prev_t = 0;
  for (std::size_t i = 0; i < j.steps.size(); ++i) {
    const auto& s = j.steps[i];
    std::string where = "step " + std::to_string(i);
    if (bad_vertex(s.from) || bad_vertex(s.to)) {
      report.push_back({where + ": vertex id out of range", std::nullopt});
      at = s.to;
      prev_t = s.t;
      continue;
    }
    if (s.t <= prev_t) {
      report.push_back({where + ": non-increasing time " + std::to_string(s.t),
                        std::nullopt});
    }
    if (s.t < 1 || s.t > g.lifetime()) {
      report.push_back({where + ": time " + std::to_string(s.t) +
                            " outside [1," + std::to_string(g.lifetime()) + "]",
                        s.t});
    } else {
      if (s.from == s.to || !g.has_edge(s.t, s.from, s.to)) {
        report.push_back({where + ": edge {" + std::to_string(s.from) + "," +
                              std::to_string(s.to) + "} absent in snapshot " +
                              std::to_string(s.t),
                          s.t});
      }
    }
    if (s.from != at) {
      report.push_back({where + ": starts at " + std::to_string(s.from) +
                            " but the agent is at " + std::to_string(at),
                        std::nullopt});
    }
    at = s.to;
    prev_t = s.t;
  }
  return report;
}

Journey shift_journey(const Journey& j, TimeStep delta) {
  Journey out = j;
  for (auto& s : out.steps) s.t += delta;
  return out;
}

void append_journey(Journey& head, const Journey& tail) {
  if (tail.start != head.end()) {
    throw ValidationError("journey concatenation: tail starts at " +
                          std::to_string(tail.start) + ", head ends at " +
                          std::to_string(head.end()));
  }
  if (!head.steps.empty() && !tail.steps.empty() &&
      tail.steps.front().t <= head.steps.back().t) {
    throw ValidationError("journey concatenation: times not increasing");
  }
  head.steps.insert(head.steps.end(), tail.steps.begin(), tail.steps.end());
}

std::vector<VertexId> visited_vertices(const Journey& j) {
  std::vector<VertexId> vs = {j.start};
  for (const auto& s : j.steps) vs.push_back(s.to);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

ExplorationReport make_report(const TemporalGraph& g, Journey j,
                              std::string algorithm) {
  auto problems = journey_check(g, j);
  if (!problems.empty()) {
    throw InternalGuaranteeError("algorithm '" + algorithm +
                                 "' produced an invalid journey: " +
                                 problems.front().message);
  }
  ExplorationReport report;
  report.visited = visited_vertices(j);
  report.complete = static_cast<int>(report.visited.size()) == g.n();
  report.stats = journey_stats(j);
  report.journey = std::move(j);
  report.algorithm = std::move(algorithm);
  return report;
}

}  // namespace tempex
