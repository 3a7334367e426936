#pragma once

#include <vector>

#include "safeflow/decomposition.hpp"
#include "safeflow/flow_dag.hpp"
#include "safeflow/instrumentation.hpp"
#include "safeflow/path.hpp"

namespace safeflow {

/// One maximal safe subpath of a host path, as edge indices [first..last]
/// into the host, with its excess flow.
struct SafeWindow {
  int first_edge;
  int last_edge;
  Rational excess;
};

/// Minimal-length union of overlapping maximal safe subpaths of one
/// decomposition path, with the intervals relative to `path`.
struct CompactPath {
  Path path;
  std::vector<SafeWindow> intervals;
};

/// Concise representation P_c: duplicate-free set of compact paths covering
/// every maximal safe path of the graph exactly once.
struct ConciseRepresentation {
  std::vector<CompactPath> paths;

  /// Size metric |P_c|: total edges over the compact paths.
  std::uint64_t total_length() const;

  /// All maximal safe paths with their excess values.
  std::vector<std::pair<Path, Rational>> expand(const FlowDAG& g) const;
};

/// Two-pointer scan over a source-to-sink path p: all windows that are safe
/// and maximal within p, in O(|p|). Single-edge windows are reported when
/// neither adjacent two-edge window is safe.
std::vector<SafeWindow> maximal_safe_in_path(const FlowDAG& g, const Path& p,
                                             Counters* counters = nullptr);

/// The O(mn) enumerator: decompose, scan each path, filter windows that are
/// still extendable through an off-path max-weight sibling, dedup across
/// paths with a trie on edge-id sequences, and union overlaps per path.
ConciseRepresentation enumerate_simple(const FlowDAG& g, Counters* counters = nullptr);

}  // namespace safeflow
