#pragma once

#include <vector>

#include "safeflow/flow_dag.hpp"
#include "safeflow/rational.hpp"

namespace safeflow {

/// A path is an ordered list of edge ids; consecutive edges must chain.
struct Path {
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(edge_ids.size()); }
  bool empty() const { return edge_ids.empty(); }

  /// Vertex sequence u_1..u_k derived from the edges. Requires >= 1 edge.
  std::vector<int> vertices(const FlowDAG& g) const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct WeightedPath {
  Path path;
  Rational weight;
};

/// Throws InvalidPathError unless the edges exist, chain head-to-tail and
/// repeat no vertex.
void validate_path(const FlowDAG& g, const Path& p);

/// Builds the unique path along a vertex sequence, or throws InvalidPathError
/// (also thrown when parallel edges make the sequence ambiguous).
Path path_from_vertices(const FlowDAG& g, const std::vector<int>& vertices);

}  // namespace safeflow
