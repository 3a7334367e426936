#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "safeflow/rational.hpp"

namespace safeflow {

struct Edge {
  int tail;
  int head;
  Rational weight;
};

/// Validated edge-weighted flow DAG. Immutable after build(); safe to share
/// across threads read-only. Parallel edges are allowed and everything
/// downstream is edge-id based.
class FlowDAG {
 public:
  /// Validates and indexes the graph in O(m + n). Vertex ids are 0..n-1,
  /// n inferred as max id + 1 unless vertex_count forces more.
  /// Throws CycleError, ConservationError, NonPositiveWeightError.
  static FlowDAG build(const std::vector<Edge>& edge_triples, int vertex_count = -1);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& out_edges(int v) const { return out_adj_[static_cast<size_t>(v)]; }
  const std::vector<int>& in_edges(int v) const { return in_adj_[static_cast<size_t>(v)]; }

  const Rational& f_in(int v) const { return f_in_[static_cast<size_t>(v)]; }
  const Rational& f_out(int v) const { return f_out_[static_cast<size_t>(v)]; }

  bool is_source(int v) const { return f_in(v) == 0; }
  bool is_sink(int v) const { return f_out(v) == 0; }
  std::vector<int> sources() const;
  std::vector<int> sinks() const;

  /// Linear extension, ties broken by smallest vertex id.
  const std::vector<int>& topological_order() const { return topo_order_; }
  int topo_position(int v) const { return topo_pos_[static_cast<size_t>(v)]; }

  /// Max-weight in-edge of v (ties: smallest edge id), or -1 if none.
  int max_in_edge(int v) const { return max_in_edge_[static_cast<size_t>(v)]; }
  /// Max-weight out-edge of v (ties: smallest edge id), or -1 if none.
  int max_out_edge(int v) const { return max_out_edge_[static_cast<size_t>(v)]; }

  /// Sum over sources of f_out (= sum over sinks of f_in).
  Rational flow_value() const;

 private:
  FlowDAG() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_adj_;
  std::vector<std::vector<int>> in_adj_;
  std::vector<Rational> f_in_;
  std::vector<Rational> f_out_;
  std::vector<int> topo_order_;
  std::vector<int> topo_pos_;
  std::vector<int> max_in_edge_;
  std::vector<int> max_out_edge_;
};

}  // namespace safeflow
