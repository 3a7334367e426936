#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "safeflow/flow_dag.hpp"
#include "safeflow/instrumentation.hpp"
#include "safeflow/path.hpp"
#include "safeflow/rational.hpp"

namespace safeflow {

/// Union of the left-maximal safe paths ending at one vertex: possibly many
/// diverging trees feeding a single converging tree rooted at the end
/// vertex. Vertices with a unique sink path form the converging tree; the
/// rest have a unique source path.
class Funnel {
 public:
  Funnel() = default;
  explicit Funnel(int end_vertex) : end_vertex_(end_vertex) {}

  int end_vertex() const { return end_vertex_; }
  bool empty() const { return edge_set_.empty(); }
  std::size_t edge_count() const { return edge_set_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  /// Size metric |F_v| = vertices + edges.
  std::size_t size() const { return edge_count() + vertex_count(); }

  bool contains_edge(int edge_id) const { return edge_set_.count(edge_id) != 0; }
  bool contains_vertex(int v) const { return vertices_.count(v) != 0; }

  void add_edge(const FlowDAG& g, int edge_id);

  const std::unordered_set<int>& edge_set() const { return edge_set_; }
  const std::vector<int>& in_edges(int v) const;
  const std::vector<int>& out_edges(int v) const;

  /// Funnel vertices sorted by decreasing topological position in g.
  std::vector<int> vertices_reverse_topo(const FlowDAG& g) const;

  /// conv[v] == true iff all funnel out-edges of v lead to one converging
  /// vertex (v is in the converging tree). Parallel edges count as one
  /// branch, so a bundle of siblings stays inside the tree. Indexed by
  /// vertex id over g.
  std::vector<char> converging_tree(const FlowDAG& g) const;

  /// Vertices with no in-edge inside the funnel, ascending ids.
  std::vector<int> funnel_sources() const;

 private:
  int end_vertex_ = -1;
  std::unordered_set<int> edge_set_;
  std::unordered_set<int> vertices_;
  std::unordered_map<int, std::vector<int>> in_adj_;
  std::unordered_map<int, std::vector<int>> out_adj_;
};

/// One maximal safe path, encoded as (characteristic edge, start vertex,
/// excess flow) relative to the funnel it was reported from.
struct SolutionTriplet {
  int characteristic_edge;
  int start_vertex;
  Rational excess;
};

/// Copy-on-prune overlay over one funnel: right-extendable paths are deleted
/// from the reported funnel without touching the shared base structure.
class FunnelOverlay {
 public:
  FunnelOverlay() = default;
  FunnelOverlay(const FlowDAG& g, const Funnel& base);

  bool contains_edge(int edge_id) const;
  std::size_t removed_count() const { return removed_.size(); }

  /// Deletes the characteristic edge, then prunes the dangling chains it
  /// leaves behind (vertices with no remaining out-edges to the left, no
  /// remaining in-edges to the right).
  void remove_with_extensions(const FlowDAG& g, int edge_id);

 private:
  int in_degree(int v) const;
  int out_degree(int v) const;
  void remove_edge(const FlowDAG& g, int edge_id);

  const Funnel* base_ = nullptr;
  std::unordered_set<int> removed_;
  std::unordered_map<int, int> in_deg_;
  std::unordered_map<int, int> out_deg_;
};

/// Builds the funnel of left-maximal safe paths ending at every vertex, by
/// one pass over the vertices in topological order. O(m log n + n^2 + |P_c|).
std::vector<Funnel> build_funnels(const FlowDAG& g, Counters* counters = nullptr);

struct ReportResult {
  std::vector<SolutionTriplet> solutions;
  FunnelOverlay pruned;
};

/// Reports all maximal safe paths ending at u from its funnel, using
/// mergeable lazy heaps over the diverging trees.
ReportResult report_maximal(const FlowDAG& g, const Funnel& funnel, int u,
                            Counters* counters = nullptr);

/// Reconstructs the path a triplet encodes: diverging-tree walk from the
/// start vertex to the characteristic edge, then converging-tree child
/// pointers down to the funnel's end vertex. Throws DanglingTripletError if
/// the tree walk is broken.
Path expand_solution(const FlowDAG& g, const Funnel& funnel, const SolutionTriplet& t);

/// All funnel paths a triplet matches (same start, characteristic edge and
/// excess). More than one path only when parallel siblings make the triplet
/// encoding ambiguous; each match is then a distinct maximal safe path.
std::vector<Path> expand_solutions(const FlowDAG& g, const Funnel& funnel,
                                   const SolutionTriplet& t);

/// Convenience: build funnels, report at every vertex, expand everything.
std::vector<std::pair<Path, Rational>> enumerate_funnel(const FlowDAG& g,
                                                        Counters* counters = nullptr);

}  // namespace safeflow
