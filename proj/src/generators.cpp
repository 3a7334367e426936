#include "safeflow/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "safeflow/errors.hpp"

namespace safeflow {
namespace {

/// Minimal deterministic RNG (xorshift*) so generated graphs are identical
/// across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
  }

  /// Uniform-ish integer in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

void check_ladder_spec(int k, const CdEdges& cd) {
  if (k < 1) throw InvalidSpecError("k must be >= 1");
  if (cd.empty()) throw InvalidSpecError("need at least one C x D edge");
  for (auto [j, l] : cd) {
    if (j < 1 || j > k || l < 1 || l > k) throw InvalidSpecError("C x D index out of range");
  }
}

}  // namespace

CdEdges full_cd(int k) {
  CdEdges out;
  for (int j = 1; j <= k; ++j)
    for (int l = 1; l <= k; ++l) out.emplace_back(j, l);
  return out;
}

CdEdges diagonal_cd(int k) {
  CdEdges out;
  for (int j = 1; j <= k; ++j) out.emplace_back(j, j);
  return out;
}

CdEdges random_cd(int k, int count, std::uint64_t seed) {
  CdEdges all = full_cd(k);
  if (count < 1 || count > static_cast<int>(all.size()))
    throw InvalidSpecError("bad C x D edge count");
  Rng rng(seed);
  for (std::size_t i = all.size(); i > 1; --i) {
    std::swap(all[i - 1], all[static_cast<size_t>(rng.range(0, static_cast<int>(i) - 1))]);
  }
  all.resize(static_cast<size_t>(count));
  std::sort(all.begin(), all.end());
  return all;
}

FlowDAG gen_worst(int k, const CdEdges& cd_edges) {
  check_ladder_spec(k, cd_edges);
  LadderLayout lay{k};
  const long cd = static_cast<long>(cd_edges.size());
  std::vector<int> c_out(static_cast<size_t>(k + 1), 0), d_in(static_cast<size_t>(k + 1), 0);
  for (auto [j, l] : cd_edges) {
    c_out[static_cast<size_t>(j)]++;
    d_in[static_cast<size_t>(l)]++;
  }

  // Chain edges carry k*|cd| - 1, shadowed by unit-flow siblings. The unit
  // leak makes every chain extension cost exactly one excess, so the path
  // a_i..b_1 has excess i and its maximal extension stops at b_i.
  const Rational heavy = Rational(k) * cd - 1;
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) {
    edges.push_back(Edge{lay.a(i), lay.a(i + 1), heavy});
    edges.push_back(Edge{lay.a(i), lay.a(i + 1), Rational(1)});
  }
  // C x D carries flow k per edge.
  for (int j = 1; j <= k; ++j) {
    if (c_out[static_cast<size_t>(j)] > 0)
      edges.push_back(Edge{lay.a(k), lay.c(j), Rational(k) * c_out[static_cast<size_t>(j)]});
  }
  for (auto [j, l] : cd_edges) edges.push_back(Edge{lay.c(j), lay.d(l), Rational(k)});
  for (int l = 1; l <= k; ++l) {
    if (d_in[static_cast<size_t>(l)] > 0)
      edges.push_back(Edge{lay.d(l), lay.b(1), Rational(k) * d_in[static_cast<size_t>(l)]});
  }
  for (int i = 1; i < k; ++i) {
    edges.push_back(Edge{lay.b(i), lay.b(i + 1), heavy});
    edges.push_back(Edge{lay.b(i), lay.b(i + 1), Rational(1)});
  }
  return FlowDAG::build(edges, lay.vertex_count());
}

FlowDAG gen_best(int k, const CdEdges& cd_edges) {
  check_ladder_spec(k, cd_edges);
  if (k < 2) throw InvalidSpecError("best-case family needs k >= 2");
  if (cd_edges.size() < 2) throw InvalidSpecError("best-case family needs >= 2 C x D edges");
  LadderLayout lay{k};
  const long cd = static_cast<long>(cd_edges.size());
  std::vector<int> c_out(static_cast<size_t>(k + 1), 0), d_in(static_cast<size_t>(k + 1), 0);
  for (auto [j, l] : cd_edges) {
    c_out[static_cast<size_t>(j)]++;
    d_in[static_cast<size_t>(l)]++;
  }

  // The flow k*|cd| splits over two equal parallel edges into a_k (and out
  // of b_1), so crossing the split costs k*|cd|/2 excess and the k-safe
  // paths through C x D stay within a_k..b_1, at O(1) size each.
  const Rational total = Rational(k) * cd;
  const Rational half = total / 2;
  std::vector<Edge> edges;
  for (int i = 1; i < k - 1; ++i) {
    edges.push_back(Edge{lay.a(i), lay.a(i + 1), total});
  }
  edges.push_back(Edge{lay.a(k - 1), lay.a(k), half});
  edges.push_back(Edge{lay.a(k - 1), lay.a(k), half});
  // C x D carries flow k per edge.
  for (int j = 1; j <= k; ++j) {
    if (c_out[static_cast<size_t>(j)] > 0)
      edges.push_back(Edge{lay.a(k), lay.c(j), Rational(k) * c_out[static_cast<size_t>(j)]});
  }
  for (auto [j, l] : cd_edges) edges.push_back(Edge{lay.c(j), lay.d(l), Rational(k)});
  for (int l = 1; l <= k; ++l) {
    if (d_in[static_cast<size_t>(l)] > 0)
      edges.push_back(Edge{lay.d(l), lay.b(1), Rational(k) * d_in[static_cast<size_t>(l)]});
  }
  edges.push_back(Edge{lay.b(1), lay.b(2), half});
  edges.push_back(Edge{lay.b(1), lay.b(2), half});
  for (int i = 2; i < k; ++i) {
    edges.push_back(Edge{lay.b(i), lay.b(i + 1), total});
  }
  return FlowDAG::build(edges, lay.vertex_count());
}

FlowDAG gen_random_weighted(int n, const std::vector<int>& path_weights, std::uint64_t seed) {
  if (n < 2) throw InvalidSpecError("n must be >= 2");
  Rng rng(seed);

  // Random topological labelling: vertex order[i] sits at position i.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(rng.range(0, i))]);
  }

  // Designated source/sink positions keep conservation intact under
  // superposition: paths never enter a source and never leave a sink.
  std::vector<char> is_source_pos(static_cast<size_t>(n), 0);
  std::vector<char> is_sink_pos(static_cast<size_t>(n), 0);
  is_source_pos[0] = 1;
  is_sink_pos[static_cast<size_t>(n - 1)] = 1;
  for (int i = 1; i < n - 1; ++i) {
    int roll = rng.range(0, 7);
    if (roll == 0) is_source_pos[static_cast<size_t>(i)] = 1;
    else if (roll == 1) is_sink_pos[static_cast<size_t>(i)] = 1;
  }

  std::vector<int> source_positions;
  for (int i = 0; i < n; ++i)
    if (is_source_pos[static_cast<size_t>(i)] && i < n - 1) source_positions.push_back(i);

  std::map<std::pair<int, int>, Rational> flow;
  for (int w : path_weights) {
    if (w < 1) throw InvalidSpecError("path weight must be >= 1");
    int pos = source_positions[static_cast<size_t>(
        rng.range(0, static_cast<int>(source_positions.size()) - 1))];
    for (;;) {
      // Next hop: uniform among the first few non-source positions ahead.
      std::vector<int> candidates;
      for (int next = pos + 1; next < n && candidates.size() < 4; ++next) {
        if (!is_source_pos[static_cast<size_t>(next)]) candidates.push_back(next);
      }
      int hop = candidates[static_cast<size_t>(
          rng.range(0, static_cast<int>(candidates.size()) - 1))];
      flow[{order[static_cast<size_t>(pos)], order[static_cast<size_t>(hop)]}] += w;
      pos = hop;
      if (is_sink_pos[static_cast<size_t>(pos)]) break;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(flow.size());
  for (const auto& [uv, w] : flow) edges.push_back(Edge{uv.first, uv.second, w});
  return FlowDAG::build(edges, n);
}

FlowDAG gen_random(int n, int paths, int max_weight, std::uint64_t seed) {
  if (paths < 1 || max_weight < 1) throw InvalidSpecError("need paths >= 1 and max weight >= 1");
  Rng rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  std::vector<int> weights;
  weights.reserve(static_cast<size_t>(paths));
  for (int i = 0; i < paths; ++i) weights.push_back(rng.range(1, max_weight));
  return gen_random_weighted(n, weights, seed);
}

}  // namespace safeflow
