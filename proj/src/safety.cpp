#include "safeflow/safety.hpp"

#include "safeflow/errors.hpp"

namespace safeflow {

ExcessFlow excess_flow(const FlowDAG& g, const Path& p, Counters* counters) {
  validate_path(g, p);
  Rational total = 0;
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
    const Edge& e = g.edge(p.edge_ids[i]);
    total += e.weight;
    if (i + 1 < p.edge_ids.size()) total -= g.f_out(e.head);
    if (counters) counters->touched_edges++;
  }
  return ExcessFlow{total};
}

Rational excess_flow_diverging(const FlowDAG& g, const Path& p) {
  validate_path(g, p);
  // f(u1,u2) minus every edge leaving an internal vertex off the path.
  Rational total = g.edge(p.edge_ids.front()).weight;
  for (std::size_t i = 0; i + 1 < p.edge_ids.size(); ++i) {
    int v = g.edge(p.edge_ids[i]).head;
    int next_edge = p.edge_ids[i + 1];
    for (int eid : g.out_edges(v)) {
      if (eid != next_edge) total -= g.edge(eid).weight;
    }
  }
  return total;
}

Rational excess_flow_converging(const FlowDAG& g, const Path& p) {
  validate_path(g, p);
  Rational total = g.edge(p.edge_ids.back()).weight;
  for (std::size_t i = 1; i < p.edge_ids.size(); ++i) {
    int v = g.edge(p.edge_ids[i]).tail;
    int prev_edge = p.edge_ids[i - 1];
    for (int eid : g.in_edges(v)) {
      if (eid != prev_edge) total -= g.edge(eid).weight;
    }
  }
  return total;
}

bool is_w_safe(const FlowDAG& g, const Path& p, const Rational& w) {
  if (w <= 0) throw NonPositiveWError();
  return excess_flow(g, p).value >= w;
}

bool is_safe(const FlowDAG& g, const Path& p) { return excess_flow(g, p).value > 0; }

Rational extend_right_delta(const FlowDAG& g, const Path& p, const Rational& current_excess,
                            int edge_id) {
  if (p.empty() || edge_id < 0 || edge_id >= g.edge_count())
    throw InvalidExtensionError("bad extension");
  const Edge& e = g.edge(edge_id);
  if (e.tail != g.edge(p.edge_ids.back()).head)
    throw InvalidExtensionError("edge does not chain onto path end");
  return current_excess - (g.f_out(e.tail) - e.weight);
}

Rational extend_left_delta(const FlowDAG& g, int edge_id, const Path& p,
                           const Rational& current_excess) {
  if (p.empty() || edge_id < 0 || edge_id >= g.edge_count())
    throw InvalidExtensionError("bad extension");
  const Edge& e = g.edge(edge_id);
  if (e.head != g.edge(p.edge_ids.front()).tail)
    throw InvalidExtensionError("edge does not chain onto path start");
  return current_excess - (g.f_in(e.head) - e.weight);
}

}  // namespace safeflow
