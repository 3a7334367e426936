#pragma once

#include "safeflow/flow_dag.hpp"
#include "safeflow/instrumentation.hpp"
#include "safeflow/path.hpp"
#include "safeflow/rational.hpp"

namespace safeflow {

/// Excess flow of a path: the amount of flow forced through it in every
/// decomposition. May be <= 0 for arbitrary paths; for a single edge it
/// equals f(e) > 0.
struct ExcessFlow {
  Rational value;
};

/// Computes f_P = sum f(e_i) - sum over internal vertices of f_out, in
/// O(|P|) using the precomputed per-vertex sums. Touches exactly the edges
/// of p (counted in counters->touched_edges when given).
ExcessFlow excess_flow(const FlowDAG& g, const Path& p, Counters* counters = nullptr);

/// Raw diverging-criterion sum: f(u1,u2) minus all flow leaving internal
/// vertices off the path. Equal to excess_flow; kept as the second algebraic
/// route for cross-checks.
Rational excess_flow_diverging(const FlowDAG& g, const Path& p);

/// Raw converging-criterion sum: f(u_{k-1},u_k) minus all flow entering
/// internal vertices off the path.
Rational excess_flow_converging(const FlowDAG& g, const Path& p);

/// A path is w-safe iff its excess flow is at least w (w > 0).
bool is_w_safe(const FlowDAG& g, const Path& p, const Rational& w);

/// Safe iff excess flow is strictly positive.
bool is_safe(const FlowDAG& g, const Path& p);

/// New excess after appending edge e to p's end: f_P - (f_out(u) - f(u,v)).
/// O(1); throws InvalidExtensionError unless e chains onto p's last vertex.
Rational extend_right_delta(const FlowDAG& g, const Path& p, const Rational& current_excess,
                            int edge_id);

/// New excess after prepending edge e to p's start: f_P - (f_in(v) - f(u,v)).
Rational extend_left_delta(const FlowDAG& g, int edge_id, const Path& p,
                           const Rational& current_excess);

}  // namespace safeflow
