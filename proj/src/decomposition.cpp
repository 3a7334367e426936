#include "safeflow/decomposition.hpp"

#include <algorithm>

#include "safeflow/errors.hpp"

namespace safeflow {

std::uint64_t FlowDecomposition::total_length() const {
  std::uint64_t total = 0;
  for (const WeightedPath& wp : paths) total += static_cast<std::uint64_t>(wp.path.length());
  return total;
}

FlowDecomposition decompose(const FlowDAG& g, Counters* counters) {
  std::vector<Rational> residual;
  residual.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) residual.push_back(e.weight);

  std::vector<int> source_list = g.sources();
  FlowDecomposition out;

  for (;;) {
    int start = -1;
    for (int s : source_list) {
      Rational rem = 0;
      for (int eid : g.out_edges(s)) rem += residual[static_cast<size_t>(eid)];
      if (rem > 0) {
        start = s;
        break;
      }
    }
    if (start == -1) break;

    Path p;
    int v = start;
    for (;;) {
      int next = -1;
      for (int eid : g.out_edges(v)) {
        if (residual[static_cast<size_t>(eid)] > 0) {
          next = eid;
          break;  // out_edges are in edge-id order
        }
      }
      if (next == -1) break;
      p.edge_ids.push_back(next);
      v = g.edge(next).head;
      if (counters) counters->simple_ops++;
    }
    if (p.empty()) throw Error("internal: stuck peeling at a source");

    Rational bottleneck = residual[static_cast<size_t>(p.edge_ids.front())];
    for (int eid : p.edge_ids) bottleneck = std::min(bottleneck, residual[static_cast<size_t>(eid)]);
    for (int eid : p.edge_ids) residual[static_cast<size_t>(eid)] -= bottleneck;
    out.paths.push_back(WeightedPath{std::move(p), bottleneck});
  }

  return out;
}

}  // namespace safeflow
