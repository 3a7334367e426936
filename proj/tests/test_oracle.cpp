#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "safeflow/errors.hpp"
#include "safeflow/generators.hpp"
#include "safeflow/oracle.hpp"
#include "safeflow/safety.hpp"

using namespace safeflow;

namespace {

FlowDAG diamond() {
  return FlowDAG::build({{0, 1, Rational(3)},
                         {0, 2, Rational(2)},
                         {1, 3, Rational(3)},
                         {2, 3, Rational(2)}});
}

// All simple paths of g, by DFS over edge ids.
void all_paths_from(const FlowDAG& g, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  int head = g.edge(cur.edge_ids.back()).head;
  for (int e : g.out_edges(head)) {
    cur.edge_ids.push_back(e);
    all_paths_from(g, cur, out);
    cur.edge_ids.pop_back();
  }
}

std::vector<Path> all_paths(const FlowDAG& g) {
  std::vector<Path> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    Path p{{e}};
    all_paths_from(g, p, out);
  }
  return out;
}

}  // namespace

TEST_CASE("decomposition-universe safety equals clamped excess on the diamond") {
  FlowDAG g = diamond();
  for (const Path& p : all_paths(g)) {
    Rational expect = excess_flow(g, p).value;
    if (expect < 0) expect = 0;
    CHECK(oracle_w_safety(g, p) == expect);
  }
}

TEST_CASE("decomposition-universe safety equals clamped excess on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    FlowDAG g = gen_random_weighted(6, {1, 1, 2}, seed);
    for (const Path& p : all_paths(g)) {
      Rational expect = excess_flow(g, p).value;
      if (expect < 0) expect = 0;
      CHECK(oracle_w_safety(g, p) == expect);
    }
  }
}

TEST_CASE("the oracle refuses instances beyond its guard rails") {
  FlowDAG big = gen_worst(3, full_cd(3));  // flow value 27 > 6
  Path p{{0}};
  CHECK_THROWS_AS(oracle_w_safety(big, p), TooLargeError);
}

TEST_CASE("maximal safe paths are safe, mutually non-nested and complete") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    FlowDAG g = gen_random(4 + static_cast<int>(seed % 6), 4, 5, seed);
    std::vector<Path> maximal = oracle_maximal_safe(g);
    std::set<Path> maximal_set(maximal.begin(), maximal.end());
    CHECK(maximal_set.size() == maximal.size());
    for (const Path& p : maximal) {
      CHECK(is_safe(g, p));
      for (const Path& q : maximal) {
        if (!(p == q)) CHECK(!is_subpath(p, q));
      }
    }
    // Every safe path is contained in some maximal one.
    for (const Path& p : all_paths(g)) {
      if (!is_safe(g, p)) continue;
      bool covered = false;
      for (const Path& q : maximal) covered = covered || is_subpath(p, q);
      CHECK(covered);
    }
  }
}

TEST_CASE("left-maximal paths ending at v end at v and resist left extension") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    FlowDAG g = gen_random(8, 4, 5, seed);
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (const Path& p : oracle_left_maximal_ending_at(g, v)) {
        CHECK(g.edge(p.edge_ids.back()).head == v);
        CHECK(is_safe(g, p));
        Rational excess = excess_flow(g, p).value;
        for (int e : g.in_edges(g.edge(p.edge_ids.front()).tail)) {
          CHECK(extend_left_delta(g, e, p, excess) <= 0);
        }
      }
    }
  }
}

TEST_CASE("subpath containment is contiguous edge-sequence containment") {
  Path abc{{1, 2, 3}};
  CHECK(is_subpath(Path{{2}}, abc));
  CHECK(is_subpath(Path{{1, 2}}, abc));
  CHECK(is_subpath(abc, abc));
  CHECK(!is_subpath(Path{{1, 3}}, abc));
  CHECK(!is_subpath(Path{{3, 1}}, abc));
  CHECK(!is_subpath(abc, Path{{1, 2}}));
}
