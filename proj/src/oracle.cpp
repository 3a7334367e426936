#include "safeflow/oracle.hpp"

#include <algorithm>
#include <functional>

#include "safeflow/errors.hpp"
#include "safeflow/safety.hpp"

namespace safeflow {
namespace {

bool integral(const Rational& r) { return denominator(r) == 1; }

long to_long(const Rational& r) { return static_cast<long>(numerator(r)); }

/// Every source-to-sink path, as edge-id sequences sorted lexicographically.
std::vector<std::vector<int>> all_source_sink_paths(const FlowDAG& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> dfs = [&](int v) {
    if (g.is_sink(v) && !cur.empty()) out.push_back(cur);
    for (int eid : g.out_edges(v)) {
      cur.push_back(eid);
      dfs(g.edge(eid).head);
      cur.pop_back();
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (g.is_source(s) && !g.is_sink(s)) dfs(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_subseq(const std::vector<int>& sup, const std::vector<int>& sub) {
  if (sub.size() > sup.size()) return false;
  for (std::size_t off = 0; off + sub.size() <= sup.size(); ++off) {
    if (std::equal(sub.begin(), sub.end(), sup.begin() + static_cast<long>(off))) return true;
  }
  return false;
}

}  // namespace

bool is_subpath(const Path& sub, const Path& sup) {
  return contains_subseq(sup.edge_ids, sub.edge_ids);
}

Rational oracle_w_safety(const FlowDAG& g, const Path& p) {
  validate_path(g, p);
  if (g.vertex_count() > 8) throw TooLargeError("oracle_w_safety: n > 8");
  for (const Edge& e : g.edges()) {
    if (!integral(e.weight)) throw TooLargeError("oracle_w_safety: non-integer flow");
  }
  if (g.flow_value() > 6) throw TooLargeError("oracle_w_safety: flow value > 6");

  const std::vector<std::vector<int>> unit_paths = all_source_sink_paths(g);
  std::vector<long> residual;
  residual.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) residual.push_back(to_long(e.weight));

  long best = -1;
  long hits_so_far = 0;

  // Units are routed in non-decreasing lexicographic path order; each
  // decomposition multiset is therefore generated exactly once.
  std::function<void(std::size_t)> rec = [&](std::size_t min_idx) {
    bool any_left = false;
    for (long r : residual) {
      if (r > 0) {
        any_left = true;
        break;
      }
    }
    if (!any_left) {
      if (best == -1 || hits_so_far < best) best = hits_so_far;
      return;
    }
    for (std::size_t idx = min_idx; idx < unit_paths.size(); ++idx) {
      const std::vector<int>& q = unit_paths[idx];
      bool routable = true;
      for (int eid : q) {
        if (residual[static_cast<size_t>(eid)] < 1) {
          routable = false;
          break;
        }
      }
      if (!routable) continue;
      for (int eid : q) residual[static_cast<size_t>(eid)]--;
      long hit = contains_subseq(q, p.edge_ids) ? 1 : 0;
      hits_so_far += hit;
      rec(idx);
      hits_so_far -= hit;
      for (int eid : q) residual[static_cast<size_t>(eid)]++;
    }
  };
  rec(0);
  if (best == -1) throw Error("internal: no unit decomposition found");
  return Rational(best);
}

std::vector<Path> oracle_maximal_safe(const FlowDAG& g) {
  if (g.vertex_count() > 12) throw TooLargeError("oracle_maximal_safe: n > 12");
  std::vector<Path> safe;
  std::vector<int> cur;
  std::function<void(int)> dfs = [&](int v) {
    if (!cur.empty()) {
      Path p{cur};
      // Prefixes of safe paths are safe, so unsafe branches can be cut.
      if (excess_flow(g, p).value <= 0) return;
      safe.push_back(p);
      if (safe.size() > 200000) throw TooLargeError("oracle_maximal_safe: too many safe paths");
    }
    for (int eid : g.out_edges(v)) {
      cur.push_back(eid);
      dfs(g.edge(eid).head);
      cur.pop_back();
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) dfs(v);

  std::vector<Path> maximal;
  for (const Path& p : safe) {
    bool dominated = false;
    for (const Path& q : safe) {
      if (p.edge_ids != q.edge_ids && is_subpath(p, q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(p);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<Path> oracle_left_maximal_ending_at(const FlowDAG& g, int v) {
  if (g.vertex_count() > 12) throw TooLargeError("oracle: n > 12");
  std::vector<Path> out;
  std::vector<int> cur;  // edges in reverse (walking backwards from v)
  std::function<void(int)> dfs = [&](int x) {
    if (!cur.empty()) {
      Path p;
      p.edge_ids.assign(cur.rbegin(), cur.rend());
      if (excess_flow(g, p).value > 0) {
        bool extendable = false;
        for (int eid : g.in_edges(x)) {
          if (extend_left_delta(g, eid, p, excess_flow(g, p).value) > 0) {
            extendable = true;
            break;
          }
        }
        if (!extendable) out.push_back(p);
      }
    }
    for (int eid : g.in_edges(x)) {
      cur.push_back(eid);
      dfs(g.edge(eid).tail);
      cur.pop_back();
    }
  };
  dfs(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace safeflow
