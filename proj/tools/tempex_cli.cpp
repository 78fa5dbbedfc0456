// tempex: validate, explore, solve exactly, generate and benchmark
// constantly connected temporal graph instances.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tempex/cycle.hpp"
#include "tempex/explore_diameter.hpp"
#include "tempex/explore_general.hpp"
#include "tempex/generators.hpp"
#include "tempex/io.hpp"
#include "tempex/oracle.hpp"

namespace {

using namespace tempex;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCapacity = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << text;
}

VertexId pick_start(const TemporalGraph& g, std::optional<VertexId> flag) {
  if (flag) return *flag;
  if (g.start()) return *g.start();
  return 0;
}

int cmd_validate(const std::string& path) {
  RawInstance raw;
  try {
    raw = parse_raw_instance(slurp(path));
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }
  auto report = check_raw_instance(raw);
  for (const auto& v : report) std::cerr << v.message << "\n";
  return report.empty() ? kExitOk : kExitInvalid;
}

ExplorationReport run_algorithm(const TemporalGraph& g, const std::string& algo,
                                VertexId start, std::optional<int> k,
                                bool greedy) {
  if (algo == "general") return explore_general(g, start);
  if (algo == "baseline") return explore_baseline(g, start);
  if (algo == "cycle") return explore_cycle(g, start);
  if (algo == "diameter") {
    return explore_bounded_diameter(g, start, *k, greedy);
  }
  throw RangeError("unknown algorithm " + algo);
}

int cmd_explore(const std::string& path, const std::string& algo,
                std::optional<VertexId> start_flag, std::optional<int> k,
                bool greedy, const std::string& out_path) {
  TemporalGraph g = read_instance(slurp(path));
  VertexId start = pick_start(g, start_flag);
  auto report = run_algorithm(g, algo, start, k, greedy);
  if (!out_path.empty()) spit(out_path, write_journey(report.journey));
  std::cout << algo << "," << g.n() << "," << g.lifetime() << ","
            << report.stats.length << "," << report.stats.arrival << ","
            << (report.complete ? "true" : "false") << "\n";
  return report.complete ? kExitOk : kExitInvalid;
}

int cmd_oracle(const std::string& path, const std::string& objective,
               std::optional<VertexId> start_flag, bool unique) {
  TemporalGraph g = read_instance(slurp(path));
  VertexId start = pick_start(g, start_flag);
  Objective obj = objective == "min-arrival" ? Objective::kMinArrival
                                             : Objective::kMinEdges;
  auto result = optimal_exploration(g, start, obj, unique);
  std::ostringstream row;
  if (result.feasible) {
    row << "true," << result.best_edges << "," << result.best_arrival;
    if (unique) row << "," << (*result.unique ? "true" : "false");
  } else {
    row << "false,,";
    if (unique) row << ",";
  }
  std::cout << row.str() << "\n";
  return result.feasible ? kExitOk : kExitInvalid;
}

int cmd_gen(const std::string& family, int n, std::optional<TimeStep> lifetime,
            std::uint64_t seed, std::optional<int> k, double density,
            const std::string& out_path) {
  TimeStep effective = 0;
  if (family == "cycle-tight") {
    effective = 2 * n - 3;  // fixed by the family
  } else if (family == "cycle-missing-m") {
    effective = lifetime.value_or(2 * n - 2);
  } else {
    if (!lifetime) throw RangeError("--L is required for family " + family);
    effective = *lifetime;
  }
  auto g = generate_instance({family, n, effective, seed, k, density});
  spit(out_path, write_instance(g, family));
  return kExitOk;
}

// One bench task: one generated instance, every requested algorithm.
struct BenchTask {
  std::string family;
  int n = 0;
  TimeStep lifetime = 0;
  std::uint64_t seed = 0;
};

struct BenchRow {
  std::string text;
  bool failed = false;
};

TimeStep bench_lifetime(const std::string& family, int n,
                        const std::vector<std::string>& algos,
                        std::optional<int> k, std::optional<TimeStep> flag) {
  if (family == "cycle-tight") return 2 * n - 3;
  if (flag) return *flag;
  TimeStep needed = 1;
  auto bump = [&](std::int64_t x) {
    needed = std::max<TimeStep>(needed, static_cast<TimeStep>(x));
  };
  for (const auto& algo : algos) {
    if (algo == "general") bump(general_required_lifetime(n));
    if (algo == "baseline") bump(static_cast<std::int64_t>(n - 1) * (n - 1) + 1);
    if (algo == "diameter") bump(static_cast<std::int64_t>(k.value_or(2)) * n * n);
    if (algo == "cycle") bump(2 * n - 2);
  }
  if (family == "cycle-missing-m") bump(2 * n - 2);
  return needed;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> ns;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      ns.push_back(std::stoi(item));
    } else {
      int lo = std::stoi(item.substr(0, dots));
      int hi = std::stoi(item.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) ns.push_back(n);
    }
  }
  return ns;
}

std::vector<BenchRow> run_bench_task(const BenchTask& task,
                                     const std::vector<std::string>& algos,
                                     std::optional<int> k, double density,
                                     bool with_oracle) {
  std::vector<BenchRow> rows;
  auto prefix = [&](const std::string& algo) {
    std::ostringstream out;
    out << task.family << "," << task.n << "," << task.lifetime << ","
        << task.seed << "," << algo << ",";
    return out.str();
  };

  TemporalGraph g(2, {{Edge{0, 1}}});
  try {
    g = generate_instance(
        {task.family, task.n, task.lifetime, task.seed, k, density});
  } catch (const std::exception& e) {
    for (const auto& algo : algos) {
      rows.push_back({prefix(algo) + ",,,," + e.what(), true});
    }
    return rows;
  }
  VertexId start = pick_start(g, std::nullopt);

  std::string oracle_edges;
  if (with_oracle) {
    try {
      auto result = optimal_exploration(g, start, Objective::kMinEdges);
      if (result.feasible) oracle_edges = std::to_string(result.best_edges);
    } catch (const std::exception&) {
      // leave blank; per-algorithm rows still run
    }
  }

  for (const auto& algo : algos) {
    try {
      auto clock_start = std::chrono::steady_clock::now();
      auto report = run_algorithm(g, algo, start, k, false);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - clock_start)
                      .count();
      char ms_text[32];
      std::snprintf(ms_text, sizeof ms_text, "%.3f", ms);
      rows.push_back({prefix(algo) + std::to_string(report.stats.length) +
                          "," + std::to_string(report.stats.arrival) + "," +
                          oracle_edges + "," + ms_text + ",",
                      false});
    } catch (const std::exception& e) {
      rows.push_back({prefix(algo) + ",," + oracle_edges + ",," + e.what(),
                      true});
    }
  }
  return rows;
}

int cmd_bench(const std::string& family, const std::string& n_list,
              int trials, const std::string& algos_text,
              std::optional<int> k, double density, bool with_oracle,
              std::optional<TimeStep> lifetime_flag, int jobs,
              const std::string& out_path) {
  auto ns = parse_n_list(n_list);
  std::vector<std::string> algos;
  {
    std::stringstream ss(algos_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) algos.push_back(item);
    }
  }
  if (ns.empty() || algos.empty() || trials < 1) {
    std::cerr << "usage error: need a nonempty --n-list, --algos and --trials >= 1\n";
    return kExitUsage;
  }

  std::vector<BenchTask> tasks;
  for (int n : ns) {
    TimeStep lifetime = bench_lifetime(family, n, algos, k, lifetime_flag);
    for (int trial = 0; trial < trials; ++trial) {
      tasks.push_back({family, n, lifetime, static_cast<std::uint64_t>(trial)});
    }
  }

  std::vector<std::vector<BenchRow>> results(tasks.size());
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      results[i] = run_bench_task(tasks[i], algos, k, density, with_oracle);
    }
  } else {
    std::mutex mutex;
    std::size_t next = 0;
    auto worker = [&] {
      while (true) {
        std::size_t mine;
        {
          std::lock_guard<std::mutex> lock(mutex);
          if (next >= tasks.size()) return;
          mine = next++;
        }
        results[mine] = run_bench_task(tasks[mine], algos, k, density,
                                       with_oracle);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostringstream csv;
  csv << "family,n,L,seed,algorithm,edges,arrival,oracle_edges,wall_time_ms,error\n";
  bool any_failed = false;
  for (const auto& rows : results) {
    for (const auto& row : rows) {
      csv << row.text << "\n";
      any_failed |= row.failed;
    }
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    spit(out_path, csv.str());
  }
  return any_failed ? kExitInvalid : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shortest-exploration toolkit for constantly connected "
               "temporal graphs"};
  app.require_subcommand(1);

  std::string path, algo = "general", objective = "min-edges", family;
  std::string out_path, n_list, algos = "general";
  std::optional<VertexId> start;
  std::optional<int> k;
  std::optional<TimeStep> lifetime;
  double density = 0.5;
  std::uint64_t seed = 0;
  int n = 0, trials = 1, jobs = 1;
  bool unique = false, with_oracle = false, greedy = false;

  auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
  validate_cmd->add_option("path", path)->required();

  auto* explore_cmd = app.add_subcommand("explore", "run an exploration algorithm");
  explore_cmd->add_option("path", path)->required();
  explore_cmd->add_option("--algo", algo)
      ->check(CLI::IsMember({"general", "diameter", "cycle", "baseline"}));
  explore_cmd->add_option("--start", start);
  explore_cmd->add_option("--k", k);
  explore_cmd->add_flag("--greedy", greedy,
                        "greedy vertex order (diameter algorithm)");
  explore_cmd->add_option("--out", out_path, "write the journey document here");

  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by dynamic programming");
  oracle_cmd->add_option("path", path)->required();
  oracle_cmd->add_option("--objective", objective)
      ->check(CLI::IsMember({"min-edges", "min-arrival"}));
  oracle_cmd->add_option("--start", start);
  oracle_cmd->add_flag("--unique", unique, "also report optimum uniqueness");

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"random", "rotating-star", "bounded-diameter",
                             "random-cycle", "cycle-missing-m", "cycle-tight"}));
  gen_cmd->add_option("--n", n)->required();
  gen_cmd->add_option("--L", lifetime);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--k", k);
  gen_cmd->add_option("--density", density);
  gen_cmd->add_option("--out", out_path)->required();

  auto* bench_cmd = app.add_subcommand("bench", "benchmark algorithms to CSV");
  bench_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"random", "rotating-star", "bounded-diameter",
                             "random-cycle", "cycle-missing-m", "cycle-tight"}));
  bench_cmd->add_option("--n-list", n_list)->required();
  bench_cmd->add_option("--trials", trials);
  bench_cmd->add_option("--algos", algos);
  bench_cmd->add_flag("--with-oracle", with_oracle);
  bench_cmd->add_option("--k", k);
  bench_cmd->add_option("--density", density);
  bench_cmd->add_option("--L", lifetime);
  bench_cmd->add_option("--jobs", jobs);
  bench_cmd->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path);
    if (explore_cmd->parsed()) {
      if (algo == "diameter" && !k) {
        std::cerr << "usage error: --algo diameter requires --k\n";
        return kExitUsage;
      }
      return cmd_explore(path, algo, start, k, greedy, out_path);
    }
    if (oracle_cmd->parsed()) return cmd_oracle(path, objective, start, unique);
    if (gen_cmd->parsed()) {
      return cmd_gen(family, n, lifetime, seed, k, density, out_path);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(family, n_list, trials, algos, k, density, with_oracle,
                       lifetime, jobs, out_path);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitUsage;
}
