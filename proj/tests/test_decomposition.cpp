#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "safeflow/decomposition.hpp"
#include "safeflow/generators.hpp"

using namespace safeflow;

namespace {

// Per-edge weight sums of the decomposition must reconstruct the flow.
void check_valid(const FlowDAG& g, const FlowDecomposition& d) {
  std::map<int, Rational> used;
  for (const WeightedPath& wp : d.paths) {
    REQUIRE(wp.weight > 0);
    REQUIRE(!wp.path.empty());
    validate_path(g, wp.path);
    REQUIRE(g.is_source(g.edge(wp.path.edge_ids.front()).tail));
    REQUIRE(g.is_sink(g.edge(wp.path.edge_ids.back()).head));
    for (int e : wp.path.edge_ids) used[e] += wp.weight;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(used[e] == g.edge(e).weight);
  }
  CHECK(d.paths.size() <= static_cast<std::size_t>(g.edge_count()));
}

}  // namespace

TEST_CASE("a single chain decomposes into itself") {
  FlowDAG g = FlowDAG::build({{0, 1, Rational(4)}, {1, 2, Rational(4)}});
  FlowDecomposition d = decompose(g);
  REQUIRE(d.paths.size() == 1);
  CHECK(d.paths[0].weight == 4);
  CHECK(d.paths[0].path.edge_ids == std::vector<int>{0, 1});
  CHECK(d.total_length() == 2);
}

TEST_CASE("decomposition is valid on random instances") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    FlowDAG g = gen_random(4 + static_cast<int>(seed % 9), 4, 6, seed);
    check_valid(g, decompose(g));
  }
}

TEST_CASE("decomposition is valid on the ladder families") {
  for (int k : {2, 3, 5}) {
    check_valid(gen_worst(k, full_cd(k)), decompose(gen_worst(k, full_cd(k))));
    check_valid(gen_best(k, full_cd(k)), decompose(gen_best(k, full_cd(k))));
  }
}

TEST_CASE("rational flows decompose exactly") {
  FlowDAG g = FlowDAG::build({{0, 1, Rational(1) / 3}, {0, 1, Rational(2) / 3},
                              {1, 2, Rational(1)}});
  check_valid(g, decompose(g));
}

TEST_CASE("decomposition is deterministic") {
  FlowDAG g = gen_random(10, 5, 6, 7);
  FlowDecomposition a = decompose(g);
  FlowDecomposition b = decompose(g);
  REQUIRE(a.paths.size() == b.paths.size());
  for (std::size_t i = 0; i < a.paths.size(); ++i) {
    CHECK(a.paths[i].path == b.paths[i].path);
    CHECK(a.paths[i].weight == b.paths[i].weight);
  }
}

TEST_CASE("multi-source multi-sink graphs are covered") {
  FlowDAG g = FlowDAG::build({{0, 2, Rational(2)}, {1, 2, Rational(3)},
                              {2, 3, Rational(4)}, {2, 4, Rational(1)}});
  check_valid(g, decompose(g));
}
