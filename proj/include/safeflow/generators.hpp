#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "safeflow/flow_dag.hpp"

namespace safeflow {

/// Vertex numbering shared by the worst/best-case families (n = 4k):
/// a_1..a_k, then c_1..c_k, then d_1..d_k, then b_1..b_k; indices 1-based.
struct LadderLayout {
  int k;
  int a(int i) const { return i - 1; }
  int c(int j) const { return k + j - 1; }
  int d(int j) const { return 2 * k + j - 1; }
  int b(int i) const { return 3 * k + i - 1; }
  int vertex_count() const { return 4 * k; }
};

/// Pairs (j, l) meaning an edge c_j -> d_l, 1-based.
using CdEdges = std::vector<std::pair<int, int>>;

CdEdges full_cd(int k);
CdEdges diagonal_cd(int k);
CdEdges random_cd(int k, int count, std::uint64_t seed);

/// Worst-case ladder: chains a_1..a_k and b_1..b_k, C fed by a_k, D feeding
/// b_1, every chain edge shadowed by a parallel unit-flow edge, flow k on
/// each C x D edge. Every a_i..b_1 path has excess i, its maximal extension
/// runs exactly a_i..b_i, and the concise representation is as large as the
/// decomposition.
FlowDAG gen_worst(int k, const CdEdges& cd_edges);

/// Best-case ladder: same skeleton, but the a_{k-1}->a_k and b_1->b_2
/// connections are two parallel equal-flow edges and each C x D edge
/// carries flow k. Safe paths crossing C x D shrink to O(1) size, so the
/// concise representation is O(m + n) while the decomposition stays Omega(mn).
FlowDAG gen_best(int k, const CdEdges& cd_edges);

/// Superposition of `paths` random source-to-sink paths over a random
/// topological order, integer weights in [1, max_weight]. Conservation holds
/// by construction; deterministic under seed.
FlowDAG gen_random(int n, int paths, int max_weight, std::uint64_t seed);

/// As gen_random but with the per-path weights given explicitly (used to
/// bound the global flow value for the decomposition-universe oracle).
FlowDAG gen_random_weighted(int n, const std::vector<int>& path_weights, std::uint64_t seed);

}  // namespace safeflow
