#pragma once

#include <vector>

#include "safeflow/flow_dag.hpp"
#include "safeflow/path.hpp"
#include "safeflow/rational.hpp"

namespace safeflow {

// Brute-force ground truth. Deliberately slow and obviously correct; guarded
// against explosion by hard limits on instance size.

/// Enumerates every flow decomposition into unit-weight source-to-sink paths
/// (requires integer flows, global flow value <= 6, n <= 8) and returns the
/// minimum, over decompositions, of the number of unit paths containing p as
/// a subpath. Equals max(excess_flow(p), 0) by the characterization.
Rational oracle_w_safety(const FlowDAG& g, const Path& p);

/// All maximal safe paths by exhaustive path enumeration (n <= 12): every
/// path with positive excess, minus those that are a proper subpath of
/// another kept path.
std::vector<Path> oracle_maximal_safe(const FlowDAG& g);

/// All safe paths ending at v that no single-edge left extension keeps safe.
/// Used to validate funnel contents.
std::vector<Path> oracle_left_maximal_ending_at(const FlowDAG& g, int v);

/// True iff sub's edge sequence occurs contiguously inside sup's.
bool is_subpath(const Path& sub, const Path& sup);

}  // namespace safeflow
