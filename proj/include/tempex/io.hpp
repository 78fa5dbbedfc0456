#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/journey.hpp"

namespace tempex {

// Instance document, canonical UTF-8 JSON:
//   {"version":1,"n":<int>,"L":<int>,"start":<int optional>,
//    "snapshots":[[[u,v],...],...]}
// The outer snapshots array has length L; inner edge lists are written
// sorted lexicographically with u < v. Readers accept either edge
// orientation and ignore unknown fields (generators add a "family" tag).

/// Instance document as parsed, before any normalization. Lets the CLI
/// report validation problems instead of refusing broken files outright.
struct RawInstance {
  int n = 0;
  int declared_lifetime = 0;
  std::optional<VertexId> start;
  std::optional<std::string> family;
  std::vector<std::vector<std::pair<int, int>>> snapshots;
};

/// Throws ParseError (with position info for JSON syntax problems, or the
/// offending field name for structural ones).
RawInstance parse_raw_instance(const std::string& text);

/// Everything wrong with the document: L mismatch, id range, self-loops,
/// duplicate edges, disconnected snapshots. Empty == valid.
ValidationReport check_raw_instance(const RawInstance& raw);

/// Builds the graph, normalizing edge orientation. Call after
/// check_raw_instance came back clean (throws ValidationError otherwise).
TemporalGraph graph_from_raw(const RawInstance& raw);

/// parse + check + build in one go; throws ParseError or ValidationError.
TemporalGraph read_instance(const std::string& text);

/// Canonical document; write_instance(read_instance(doc)) reproduces every
/// canonical doc byte for byte. `family` adds the generator annotation.
std::string write_instance(const TemporalGraph& g,
                           const std::string& family = "");

/// Journey document: {"start":<int>,"steps":[{"t":..,"from":..,"to":..},...]}
std::string write_journey(const Journey& j);
Journey read_journey(const std::string& text);

}  // namespace tempex
