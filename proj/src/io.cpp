#include "tempex/io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace tempex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // nlohmann messages carry the byte position
  }
}

int require_int(const json& doc, const char* field) {
  if (!doc.contains(field)) {
    throw ParseError(std::string("missing field \"") + field + "\"");
  }
  const auto& v = doc.at(field);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + field + "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

RawInstance parse_raw_instance(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance document must be an object");

  RawInstance raw;
  int version = require_int(doc, "version");
  if (version != 1) {
    throw ParseError("unsupported version " + std::to_string(version));
  }
  raw.n = require_int(doc, "n");
  raw.declared_lifetime = require_int(doc, "L");
  if (doc.contains("start")) {
    if (!doc.at("start").is_number_integer()) {
      throw ParseError("field \"start\" must be an integer");
    }
    raw.start = doc.at("start").get<int>();
  }
  if (doc.contains("family") && doc.at("family").is_string()) {
    raw.family = doc.at("family").get<std::string>();
  }

  if (!doc.contains("snapshots")) throw ParseError("missing field \"snapshots\"");
  const auto& snaps = doc.at("snapshots");
  if (!snaps.is_array()) throw ParseError("field \"snapshots\" must be an array");
  raw.snapshots.reserve(snaps.size());
  for (std::size_t t = 0; t < snaps.size(); ++t) {
    const auto& snap = snaps[t];
    if (!snap.is_array()) {
      throw ParseError("snapshot " + std::to_string(t + 1) + " must be an array");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(snap.size());
    for (const auto& e : snap) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("snapshot " + std::to_string(t + 1) +
                         ": each edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    raw.snapshots.push_back(std::move(edges));
  }
  return raw;
}

ValidationReport check_raw_instance(const RawInstance& raw) {
  ValidationReport report;
  if (raw.n < 2) {
    report.push_back({"n must be >= 2, got " + std::to_string(raw.n),
                      std::nullopt});
  }
  if (raw.declared_lifetime < 1) {
    report.push_back({"L must be >= 1, got " +
                          std::to_string(raw.declared_lifetime),
                      std::nullopt});
  }
  if (raw.declared_lifetime != static_cast<int>(raw.snapshots.size())) {
    report.push_back({"L = " + std::to_string(raw.declared_lifetime) +
                          " but document has " +
                          std::to_string(raw.snapshots.size()) + " snapshots",
                      std::nullopt});
  }
  if (raw.start && (*raw.start < 0 || *raw.start >= raw.n)) {
    report.push_back({"start vertex " + std::to_string(*raw.start) +
                          " out of range",
                      std::nullopt});
  }

  for (std::size_t i = 0; i < raw.snapshots.size(); ++i) {
    TimeStep t = static_cast<TimeStep>(i + 1);
    std::set<Edge> seen;
    bool snapshot_clean = true;
    for (const auto& [a, b] : raw.snapshots[i]) {
      if (a == b) {
        report.push_back({"snapshot " + std::to_string(t) + ": self-loop at " +
                              std::to_string(a),
                          t});
        snapshot_clean = false;
        continue;
      }
      if (a < 0 || a >= raw.n || b < 0 || b >= raw.n) {
        report.push_back({"snapshot " + std::to_string(t) + ": edge [" +
                              std::to_string(a) + "," + std::to_string(b) +
                              "] out of range",
                          t});
        snapshot_clean = false;
        continue;
      }
      Edge e = a < b ? Edge{a, b} : Edge{b, a};
      if (!seen.insert(e).second) {
        report.push_back({"snapshot " + std::to_string(t) +
                              ": duplicate edge [" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "]",
                          t});
        snapshot_clean = false;
      }
    }
    if (snapshot_clean && raw.n >= 2) {
      std::vector<Edge> edges(seen.begin(), seen.end());
      StaticGraph snap(raw.n, std::move(edges));
      if (!snap.is_connected()) {
        report.push_back({"snapshot " + std::to_string(t) + " disconnected", t});
      }
    }
  }
  return report;
}

TemporalGraph graph_from_raw(const RawInstance& raw) {
  auto problems = check_raw_instance(raw);
  if (!problems.empty()) {
    throw ValidationError("invalid instance: " + problems.front().message +
                          (problems.size() > 1
                               ? " (+" + std::to_string(problems.size() - 1) +
                                     " more)"
                               : ""));
  }
  std::vector<std::vector<Edge>> snaps;
  snaps.reserve(raw.snapshots.size());
  for (const auto& snap : raw.snapshots) {
    std::vector<Edge> edges;
    edges.reserve(snap.size());
    for (const auto& [a, b] : snap) edges.push_back(make_edge(a, b));
    snaps.push_back(std::move(edges));
  }
  return TemporalGraph(raw.n, std::move(snaps), raw.start);
}

TemporalGraph read_instance(const std::string& text) {
  return graph_from_raw(parse_raw_instance(text));
}

std::string write_instance(const TemporalGraph& g, const std::string& family) {
  ordered_json doc;
  doc["version"] = 1;
  doc["n"] = g.n();
  doc["L"] = g.lifetime();
  if (g.start()) doc["start"] = *g.start();
  if (!family.empty()) doc["family"] = family;
  ordered_json snaps = ordered_json::array();
  for (TimeStep t = 1; t <= g.lifetime(); ++t) {
    ordered_json snap = ordered_json::array();
    for (const auto& e : g.snapshot(t)) {
      snap.push_back(ordered_json::array({e.u, e.v}));
    }
    snaps.push_back(std::move(snap));
  }
  doc["snapshots"] = std::move(snaps);
  return doc.dump();
}

std::string write_journey(const Journey& j) {
  ordered_json doc;
  doc["start"] = j.start;
  ordered_json steps = ordered_json::array();
  for (const auto& s : j.steps) {
    ordered_json step;
    step["t"] = s.t;
    step["from"] = s.from;
    step["to"] = s.to;
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  return doc.dump();
}

Journey read_journey(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("journey document must be an object");
  Journey j;
  j.start = require_int(doc, "start");
  if (!doc.contains("steps") || !doc.at("steps").is_array()) {
    throw ParseError("missing field \"steps\"");
  }
  for (const auto& s : doc.at("steps")) {
    if (!s.is_object()) throw ParseError("each step must be an object");
    JourneyStep step;
    step.t = require_int(s, "t");
    step.from = require_int(s, "from");
    step.to = require_int(s, "to");
    j.steps.push_back(step);
  }
  return j;
}

}  // namespace tempex
