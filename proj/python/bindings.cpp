#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempex/cycle.hpp"
#include "tempex/explore_diameter.hpp"
#include "tempex/explore_general.hpp"
#include "tempex/generators.hpp"
#include "tempex/io.hpp"
#include "tempex/oracle.hpp"
#include "tempex/reachability.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace tempex;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

TemporalGraph graph_from_lists(int n, const std::vector<EdgeList>& snapshots,
                               std::optional<VertexId> start) {
  std::vector<std::vector<Edge>> snaps;
  snaps.reserve(snapshots.size());
  for (const auto& snap : snapshots) {
    std::vector<Edge> edges;
    edges.reserve(snap.size());
    for (auto [a, b] : snap) edges.push_back(make_edge(a, b));
    snaps.push_back(std::move(edges));
  }
  return TemporalGraph(n, std::move(snaps), start);
}

EdgeList edges_to_list(const std::vector<Edge>& edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::string> report_messages(const ValidationReport& report) {
  std::vector<std::string> out;
  out.reserve(report.size());
  for (const auto& v : report) out.push_back(v.message);
  return out;
}

Objective parse_objective(const std::string& name) {
  if (name == "min-edges") return Objective::kMinEdges;
  if (name == "min-arrival") return Objective::kMinArrival;
  throw RangeError("objective must be 'min-edges' or 'min-arrival'");
}

Rotation parse_rotation(const std::string& name) {
  if (name == "clockwise") return Rotation::kClockwise;
  if (name == "counter-clockwise") return Rotation::kCounterClockwise;
  throw RangeError("direction must be 'clockwise' or 'counter-clockwise'");
}

}  // namespace

PYBIND11_MODULE(_tempex, m) {
  m.doc() = "shortest temporal exploration on constantly connected "
            "temporal graphs";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<ShapeError>(m, "ShapeError", base);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  py::register_exception<GenerationError>(m, "GenerationError", base);
  py::register_exception<InternalGuaranteeError>(m, "InternalGuaranteeError",
                                                 base);

  py::class_<TemporalGraph>(m, "TemporalGraph")
      .def(py::init(&graph_from_lists), "n"_a, "snapshots"_a,
           "start"_a = std::nullopt,
           "Build from per-step edge lists; edges normalize to (min, max).")
      .def_property_readonly("n", &TemporalGraph::n)
      .def_property_readonly("lifetime", &TemporalGraph::lifetime)
      .def_property_readonly("start", &TemporalGraph::start)
      .def("snapshot",
           [](const TemporalGraph& g, TimeStep t) {
             return edges_to_list(g.snapshot(t));
           },
           "t"_a, "Edge list of snapshot t (1-indexed).")
      .def("underlying_edges",
           [](const TemporalGraph& g) {
             return edges_to_list(g.underlying_graph().edges());
           })
      .def("window", &TemporalGraph::window, "a"_a, "b"_a)
      .def("to_json",
           [](const TemporalGraph& g, const std::string& family) {
             return write_instance(g, family);
           },
           "family"_a = "")
      .def_static("from_json", &read_instance, "text"_a)
      .def("__repr__", [](const TemporalGraph& g) {
        return "TemporalGraph(n=" + std::to_string(g.n()) +
               ", lifetime=" + std::to_string(g.lifetime()) + ")";
      });

  py::class_<JourneyStep>(m, "JourneyStep")
      .def_readonly("t", &JourneyStep::t)
      .def_readonly("from_vertex", &JourneyStep::from)
      .def_readonly("to_vertex", &JourneyStep::to)
      .def("__repr__", [](const JourneyStep& s) {
        return "(" + std::to_string(s.t) + ", " + std::to_string(s.from) +
               "->" + std::to_string(s.to) + ")";
      });

  py::class_<Journey>(m, "Journey")
      .def_readonly("start", &Journey::start)
      .def_readonly("steps", &Journey::steps)
      .def_property_readonly("end", &Journey::end)
      .def_property_readonly("length", &Journey::length)
      .def("to_json", &write_journey)
      .def_static("from_json", &read_journey, "text"_a)
      .def("__len__", &Journey::length);

  py::class_<JourneyStats>(m, "JourneyStats")
      .def_readonly("length", &JourneyStats::length)
      .def_readonly("arrival", &JourneyStats::arrival)
      .def_readonly("duration", &JourneyStats::duration);

  py::class_<ExplorationReport>(m, "ExplorationReport")
      .def_readonly("journey", &ExplorationReport::journey)
      .def_readonly("visited", &ExplorationReport::visited)
      .def_readonly("complete", &ExplorationReport::complete)
      .def_readonly("algorithm", &ExplorationReport::algorithm)
      .def_property_readonly(
          "edges", [](const ExplorationReport& r) { return r.stats.length; })
      .def_property_readonly(
          "arrival", [](const ExplorationReport& r) { return r.stats.arrival; })
      .def("__repr__", [](const ExplorationReport& r) {
        return "ExplorationReport(algorithm=" + r.algorithm +
               ", edges=" + std::to_string(r.stats.length) +
               ", arrival=" + std::to_string(r.stats.arrival) +
               ", complete=" + (r.complete ? "True" : "False") + ")";
      });

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("feasible", &OracleResult::feasible)
      .def_readonly("best_edges", &OracleResult::best_edges)
      .def_readonly("best_arrival", &OracleResult::best_arrival)
      .def_readonly("witness", &OracleResult::witness)
      .def_readonly("unique", &OracleResult::unique);

  m.def("validate",
        [](const TemporalGraph& g) { return report_messages(validate(g)); },
        "g"_a, "Messages for every disconnected snapshot; empty == valid.");
  m.def("journey_check",
        [](const TemporalGraph& g, const Journey& j) {
          return report_messages(journey_check(g, j));
        },
        "g"_a, "journey"_a);
  m.def("journey_stats", &journey_stats, "journey"_a);

  m.def("foremost_journey", &foremost_journey, "g"_a, "u"_a, "v"_a,
        "t_start"_a,
        "Earliest-arrival journey u->v departing no earlier than t_start.");
  m.def("journey_from_recurring_paths", &journey_from_recurring_paths, "g"_a,
        "u"_a, "v"_a, "k"_a);

  m.def("explore_general",
        [](const TemporalGraph& g, VertexId s) { return explore_general(g, s); },
        "g"_a, "start"_a);
  m.def("explore_baseline", &explore_baseline, "g"_a, "start"_a);
  m.def("explore_cycle", &explore_cycle, "g"_a, "start"_a);
  m.def("explore_bounded_diameter", &explore_bounded_diameter, "g"_a,
        "start"_a, "k"_a, "greedy_order"_a = false);
  m.def("general_required_lifetime", &general_required_lifetime, "n"_a);

  m.def("unblocked_starts",
        [](const TemporalGraph& g, TimeStep t, const std::string& dir) {
          return unblocked_starts(g, t, parse_rotation(dir));
        },
        "g"_a, "t"_a, "direction"_a);
  m.def("snapshot_diameter",
        [](const TemporalGraph& g, TimeStep t) {
          return snapshot_diameter(StaticGraph(g.n(), g.snapshot(t)));
        },
        "g"_a, "t"_a, "Exact diameter of one snapshot.");

  m.def("optimal_exploration",
        [](const TemporalGraph& g, VertexId s, const std::string& objective,
           bool count_unique, std::uint64_t state_budget) {
          return optimal_exploration(g, s, parse_objective(objective),
                                     count_unique, state_budget);
        },
        "g"_a, "start"_a, "objective"_a = "min-edges",
        "count_unique"_a = false, "state_budget"_a = 0);
  m.def("journey_oracle",
        [](const TemporalGraph& g, VertexId u, VertexId v, TimeStep a,
           TimeStep b) { return journey_oracle(g, u, v, {a, b}); },
        "g"_a, "u"_a, "v"_a, "a"_a, "b"_a,
        "Exhaustive minimal journey length inside [a, b], or None.");

  m.def("gen_random_connected", &gen_random_connected, "n"_a, "lifetime"_a,
        "density"_a, "seed"_a);
  m.def("gen_rotating_star", &gen_rotating_star, "n"_a, "lifetime"_a, "seed"_a);
  m.def("gen_bounded_diameter", &gen_bounded_diameter, "n"_a, "lifetime"_a,
        "k"_a, "seed"_a);
  m.def("gen_random_cycle", &gen_random_cycle, "n"_a, "lifetime"_a, "seed"_a);
  m.def("gen_cycle_missing_m", &gen_cycle_missing_m, "n"_a, "lifetime"_a);
  m.def("gen_cycle_tight", &gen_cycle_tight, "n"_a);
}
