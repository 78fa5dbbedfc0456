#include <doctest.h>

#include "helpers.hpp"
#include "tempex/explore_diameter.hpp"
#include "tempex/generators.hpp"
#include "tempex/oracle.hpp"

using namespace tempex;
using namespace tempex::testing;

TEST_CASE("snapshot diameter") {
  CHECK(snapshot_diameter(static_of(5, complete_edges(5))) == 1);
  StaticGraph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(snapshot_diameter(path) == 4);
  StaticGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(snapshot_diameter(star) == 2);
  StaticGraph lonely(1, {});
  CHECK(snapshot_diameter(lonely) == 0);
  StaticGraph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(snapshot_diameter(split), PreconditionError);
}

TEST_CASE("fixed star, k = 2, from a leaf") {
  auto g = make_static(4, star_edges(4), 32);
  auto report = explore_bounded_diameter(g, 1, 2);
  CHECK(report.complete);
  CHECK(report.stats.length <= 2 * 3);
  CHECK(report.stats.arrival <= 2 * 4 * 3);
  auto oracle = optimal_exploration(g, 1, Objective::kMinEdges);
  REQUIRE(oracle.feasible);
  CHECK(oracle.best_edges == 4);
  CHECK(report.stats.length >= oracle.best_edges);
}

TEST_CASE("complete static graph with k = 1 hops once per vertex") {
  int n = 5;
  auto g = make_static(n, complete_edges(n), n * n);
  auto report = explore_bounded_diameter(g, 0, 1);
  CHECK(report.complete);
  CHECK(report.stats.length == n - 1);
}

TEST_CASE("rotating stars meet the k(n-1) and kn(n-1) bounds") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    int n = 16;
    auto g = gen_rotating_star(n, 2 * n * n, seed);
    auto report = explore_bounded_diameter(g, 0, 2);
    CHECK(report.complete);
    CHECK(report.stats.length <= 2 * (n - 1));
    CHECK(report.stats.arrival <= 2 * n * (n - 1));
  }
}

TEST_CASE("greedy order keeps the guarantees") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    int n = 8, k = 3;
    auto g = gen_bounded_diameter(n, k * n * n, k, seed + 50);
    auto plain = explore_bounded_diameter(g, 0, k);
    auto greedy = explore_bounded_diameter(g, 0, k, true);
    for (const auto& r : {plain, greedy}) {
      CHECK(r.complete);
      CHECK(r.stats.length <= k * (n - 1));
      CHECK(r.stats.arrival <= k * n * (n - 1));
    }
  }
}

TEST_CASE("hops stay inside their kn-step windows") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    int n = 10, k = 2;
    auto g = gen_bounded_diameter(n, k * n * n, k, seed + 7);
    auto report = explore_bounded_diameter(g, 0, k);
    // Windows are consecutive kn-step slices; a hop contributes at most k
    // edges, so no window may carry more.
    std::vector<int> per_window(n, 0);
    TimeStep prev = 0;
    for (const auto& step : report.journey.steps) {
      CHECK(step.t > prev);
      prev = step.t;
      ++per_window[(step.t - 1) / (k * n)];
    }
    for (int count : per_window) CHECK(count <= k);
  }
}

TEST_CASE("precondition failures name the offender") {
  auto path = make_static(4, path_edges(4), 64);
  CHECK_THROWS_WITH_AS(explore_bounded_diameter(path, 0, 2),
                       doctest::Contains("diameter 3"), PreconditionError);
  auto star = make_static(4, star_edges(4), 10);
  CHECK_THROWS_WITH_AS(explore_bounded_diameter(star, 0, 2),
                       doctest::Contains("32"), PreconditionError);
  CHECK_THROWS_AS(explore_bounded_diameter(star, 0, 0), PreconditionError);
  CHECK_THROWS_AS(explore_bounded_diameter(star, 0, 4), PreconditionError);
}
