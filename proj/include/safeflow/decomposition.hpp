#pragma once

#include <vector>

#include "safeflow/flow_dag.hpp"
#include "safeflow/instrumentation.hpp"
#include "safeflow/path.hpp"

namespace safeflow {

struct FlowDecomposition {
  std::vector<WeightedPath> paths;

  /// Total number of edges over all paths (|P_f| in the size metric used
  /// throughout: a path counts as its edge count).
  std::uint64_t total_length() const;
};

/// Greedy bottleneck peeling on a private residual copy: walk source to sink
/// along the smallest-id out-edge with positive residual, subtract the
/// bottleneck. Each round zeroes at least one edge, so at most m paths.
/// Deterministic; the input graph is untouched.
FlowDecomposition decompose(const FlowDAG& g, Counters* counters = nullptr);

}  // namespace safeflow
