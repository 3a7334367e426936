#include "safeflow/flow_dag.hpp"

#include <algorithm>
#include <queue>

#include "safeflow/errors.hpp"
#include "safeflow/rational.hpp"

namespace safeflow {

FlowDAG FlowDAG::build(const std::vector<Edge>& edge_triples, int vertex_count) {
  FlowDAG g;
  g.edges_ = edge_triples;

  int n = vertex_count;
  for (const Edge& e : g.edges_) {
    n = std::max(n, std::max(e.tail, e.head) + 1);
  }
  if (n < 0) n = 0;
  g.n_ = n;

  g.out_adj_.assign(static_cast<size_t>(n), {});
  g.in_adj_.assign(static_cast<size_t>(n), {});
  g.f_in_.assign(static_cast<size_t>(n), Rational(0));
  g.f_out_.assign(static_cast<size_t>(n), Rational(0));

  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges_[static_cast<size_t>(id)];
    if (e.tail < 0 || e.head < 0) throw Error("negative vertex id");
    if (e.weight <= 0) throw NonPositiveWeightError(id);
    g.out_adj_[static_cast<size_t>(e.tail)].push_back(id);
    g.in_adj_[static_cast<size_t>(e.head)].push_back(id);
    g.f_out_[static_cast<size_t>(e.tail)] += e.weight;
    g.f_in_[static_cast<size_t>(e.head)] += e.weight;
  }

  // Kahn's algorithm, smallest vertex id first.
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (const Edge& e : g.edges_) indeg[static_cast<size_t>(e.head)]++;
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push(v);
  g.topo_order_.reserve(static_cast<size_t>(n));
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    g.topo_order_.push_back(v);
    for (int eid : g.out_adj_[static_cast<size_t>(v)]) {
      int h = g.edges_[static_cast<size_t>(eid)].head;
      if (--indeg[static_cast<size_t>(h)] == 0) ready.push(h);
    }
  }
  if (static_cast<int>(g.topo_order_.size()) != n) throw CycleError();
  g.topo_pos_.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) g.topo_pos_[static_cast<size_t>(g.topo_order_[static_cast<size_t>(i)])] = i;

  for (int v = 0; v < n; ++v) {
    const Rational& in = g.f_in_[static_cast<size_t>(v)];
    const Rational& out = g.f_out_[static_cast<size_t>(v)];
    if (in != 0 && out != 0 && in != out) {
      throw ConservationError(v, "f_in=" + to_string(in) + " f_out=" + to_string(out));
    }
  }

  auto pick_max = [&g](const std::vector<int>& edge_ids) {
    int best = -1;
    for (int eid : edge_ids) {
      if (best == -1 || g.edges_[static_cast<size_t>(eid)].weight > g.edges_[static_cast<size_t>(best)].weight ||
          (g.edges_[static_cast<size_t>(eid)].weight == g.edges_[static_cast<size_t>(best)].weight && eid < best)) {
        best = eid;
      }
    }
    return best;
  };
  g.max_in_edge_.resize(static_cast<size_t>(n));
  g.max_out_edge_.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    g.max_in_edge_[static_cast<size_t>(v)] = pick_max(g.in_adj_[static_cast<size_t>(v)]);
    g.max_out_edge_[static_cast<size_t>(v)] = pick_max(g.out_adj_[static_cast<size_t>(v)]);
  }
  return g;
}

std::vector<int> FlowDAG::sources() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (is_source(v)) out.push_back(v);
  return out;
}

std::vector<int> FlowDAG::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

Rational FlowDAG::flow_value() const {
  Rational total = 0;
  for (int v = 0; v < n_; ++v)
    if (is_source(v)) total += f_out(v);
  return total;
}

}  // namespace safeflow
