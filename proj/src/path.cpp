#include "safeflow/path.hpp"

#include <unordered_set>

#include "safeflow/errors.hpp"

namespace safeflow {

std::vector<int> Path::vertices(const FlowDAG& g) const {
  std::vector<int> vs;
  if (edge_ids.empty()) return vs;
  vs.reserve(edge_ids.size() + 1);
  vs.push_back(g.edge(edge_ids.front()).tail);
  for (int eid : edge_ids) vs.push_back(g.edge(eid).head);
  return vs;
}

void validate_path(const FlowDAG& g, const Path& p) {
  if (p.empty()) throw InvalidPathError("path has no edges");
  std::unordered_set<int> seen;
  int prev_head = -1;
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
    int eid = p.edge_ids[i];
    if (eid < 0 || eid >= g.edge_count()) throw InvalidPathError("unknown edge id");
    const Edge& e = g.edge(eid);
    if (i == 0) {
      seen.insert(e.tail);
    } else if (e.tail != prev_head) {
      throw InvalidPathError("edges do not chain");
    }
    if (!seen.insert(e.head).second) throw InvalidPathError("repeated vertex");
    prev_head = e.head;
  }
}

Path path_from_vertices(const FlowDAG& g, const std::vector<int>& vertices) {
  if (vertices.size() < 2) throw InvalidPathError("need at least two vertices");
  Path p;
  p.edge_ids.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int u = vertices[i], v = vertices[i + 1];
    if (u < 0 || u >= g.vertex_count()) throw InvalidPathError("unknown vertex");
    int found = -1;
    for (int eid : g.out_edges(u)) {
      if (g.edge(eid).head == v) {
        if (found != -1)
          throw InvalidPathError("parallel edges between " + std::to_string(u) + " and " +
                                 std::to_string(v) + "; use an edge-id list");
        found = eid;
      }
    }
    if (found == -1)
      throw InvalidPathError("no edge " + std::to_string(u) + " -> " + std::to_string(v));
    p.edge_ids.push_back(found);
  }
  validate_path(g, p);
  return p;
}

}  // namespace safeflow
