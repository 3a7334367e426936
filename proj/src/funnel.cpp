#include "safeflow/funnel.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "safeflow/errors.hpp"
#include "safeflow/heap.hpp"
#include "safeflow/safety.hpp"

namespace safeflow {

namespace {
const std::vector<int> kNoEdges;
}

void Funnel::add_edge(const FlowDAG& g, int edge_id) {
  if (!edge_set_.insert(edge_id).second) return;
  const Edge& e = g.edge(edge_id);
  vertices_.insert(e.tail);
  vertices_.insert(e.head);
  in_adj_[e.head].push_back(edge_id);
  out_adj_[e.tail].push_back(edge_id);
}

const std::vector<int>& Funnel::in_edges(int v) const {
  auto it = in_adj_.find(v);
  return it == in_adj_.end() ? kNoEdges : it->second;
}

const std::vector<int>& Funnel::out_edges(int v) const {
  auto it = out_adj_.find(v);
  return it == out_adj_.end() ? kNoEdges : it->second;
}

std::vector<int> Funnel::vertices_reverse_topo(const FlowDAG& g) const {
  std::vector<int> vs(vertices_.begin(), vertices_.end());
  std::sort(vs.begin(), vs.end(),
            [&g](int a, int b) { return g.topo_position(a) > g.topo_position(b); });
  return vs;
}

std::vector<char> Funnel::converging_tree(const FlowDAG& g) const {
  std::vector<char> conv(static_cast<size_t>(g.vertex_count()), 0);
  if (end_vertex_ >= 0 && contains_vertex(end_vertex_)) conv[static_cast<size_t>(end_vertex_)] = 1;
  for (int v : vertices_reverse_topo(g)) {
    if (v == end_vertex_) continue;
    const std::vector<int>& outs = out_edges(v);
    if (outs.empty()) continue;
    const int head = g.edge(outs.front()).head;
    bool single_branch = conv[static_cast<size_t>(head)];
    for (std::size_t i = 1; single_branch && i < outs.size(); ++i) {
      single_branch = g.edge(outs[i]).head == head;
    }
    if (single_branch) conv[static_cast<size_t>(v)] = 1;
  }
  return conv;
}

std::vector<int> Funnel::funnel_sources() const {
  std::vector<int> out;
  for (int v : vertices_) {
    if (in_edges(v).empty()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FunnelOverlay::FunnelOverlay(const FlowDAG& g, const Funnel& base) : base_(&base) {
  for (int eid : base.edge_set()) {
    const Edge& e = g.edge(eid);
    in_deg_[e.head]++;
    out_deg_[e.tail]++;
  }
}

bool FunnelOverlay::contains_edge(int edge_id) const {
  return base_ != nullptr && base_->contains_edge(edge_id) && removed_.count(edge_id) == 0;
}

int FunnelOverlay::in_degree(int v) const {
  auto it = in_deg_.find(v);
  return it == in_deg_.end() ? 0 : it->second;
}

int FunnelOverlay::out_degree(int v) const {
  auto it = out_deg_.find(v);
  return it == out_deg_.end() ? 0 : it->second;
}

void FunnelOverlay::remove_edge(const FlowDAG& g, int edge_id) {
  if (!removed_.insert(edge_id).second) return;
  const Edge& e = g.edge(edge_id);
  in_deg_[e.head]--;
  out_deg_[e.tail]--;
}

void FunnelOverlay::remove_with_extensions(const FlowDAG& g, int edge_id) {
  if (!contains_edge(edge_id)) return;
  remove_edge(g, edge_id);
  // Only unambiguous dangling chains are pruned: the walk stops as soon as a
  // vertex keeps more than one candidate edge on the pruned side.
  auto sole_remaining = [this](const std::vector<int>& candidates) {
    int found = -1;
    for (int eid : candidates) {
      if (!contains_edge(eid)) continue;
      if (found != -1) return -1;
      found = eid;
    }
    return found;
  };
  // Left: walk the diverging-tree chain backwards while nothing else leaves it.
  int cur = g.edge(edge_id).tail;
  while (out_degree(cur) == 0 && in_degree(cur) > 0) {
    int in_edge = sole_remaining(base_->in_edges(cur));
    if (in_edge == -1) break;
    remove_edge(g, in_edge);
    cur = g.edge(in_edge).tail;
  }
  // Right: walk the converging-tree chain forwards while nothing else enters it.
  cur = g.edge(edge_id).head;
  while (in_degree(cur) == 0 && out_degree(cur) > 0) {
    int out_edge = sole_remaining(base_->out_edges(cur));
    if (out_edge == -1) break;
    remove_edge(g, out_edge);
    cur = g.edge(out_edge).head;
  }
}

std::vector<Funnel> build_funnels(const FlowDAG& g, Counters* counters) {
  const int n = g.vertex_count();
  std::vector<Funnel> funnels;
  funnels.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) funnels.emplace_back(v);

  // f[x]: max excess of a safe x -> v* path through u; scratch per vertex.
  std::vector<Rational> f(static_cast<size_t>(n), Rational(0));

  for (int u : g.topological_order()) {
    const std::vector<int>& outs = g.out_edges(u);
    if (outs.empty()) continue;

    // Every edge is trivially safe.
    for (int eid : outs) {
      funnels[static_cast<size_t>(g.edge(eid).head)].add_edge(g, eid);
      if (counters) counters->funnel_build_ops++;
    }

    const Funnel& fu = funnels[static_cast<size_t>(u)];
    const int star_edge = g.max_out_edge(u);
    const int v_star = g.edge(star_edge).head;
    const Rational star_weight = g.edge(star_edge).weight;

    // Extend every safe path of F_u by the max-weight out-edge (u, v*),
    // sweeping F_u once in reverse topological order.
    std::vector<int> fu_vertices = fu.vertices_reverse_topo(g);
    for (int x : fu_vertices) f[static_cast<size_t>(x)] = 0;
    f[static_cast<size_t>(u)] = star_weight;
    Funnel& fvstar = funnels[static_cast<size_t>(v_star)];
    for (int y : fu_vertices) {
      if (counters) counters->funnel_build_ops++;
      for (int eid : fu.in_edges(y)) {
        const Edge& e = g.edge(eid);
        Rational fprime = f[static_cast<size_t>(y)] - g.f_in(y) + e.weight;
        if (fprime > f[static_cast<size_t>(e.tail)]) f[static_cast<size_t>(e.tail)] = fprime;
        if (fprime > 0 && !fvstar.contains_edge(eid)) fvstar.add_edge(g, eid);
        if (counters) counters->funnel_build_ops++;
      }
    }

    if (outs.size() == 1) {
      for (int x : fu_vertices) f[static_cast<size_t>(x)] = 0;
      f[static_cast<size_t>(u)] = 0;
      continue;
    }

    // Each remaining out-neighbour gains exactly one path from F_u: the walk
    // following max-weight in-edges backwards from u, truncated where it
    // stops being safe. Suffixes are added per neighbour; prefixes are
    // resolved jointly with the neighbours sorted by out-edge weight.
    std::vector<int> others;
    for (int eid : outs) {
      if (eid != star_edge) others.push_back(eid);
    }
    std::vector<int> suffix_set = others;
    std::vector<int> prefix_queue = others;
    std::sort(prefix_queue.begin(), prefix_queue.end(), [&g](int a, int b) {
      if (g.edge(a).weight != g.edge(b).weight) return g.edge(a).weight < g.edge(b).weight;
      return a < b;
    });
    std::size_t prefix_head = 0;

    std::vector<int> walk_vertices{u};  // P, built backwards (index 0 is u)
    std::vector<int> walk_edges;        // walk_edges[i] joins vertices i+1 -> i
    std::unordered_map<int, std::size_t> walk_pos{{u, 0}};

    // Adds the prefix segment P[z .. first F_v vertex] for one neighbour.
    auto add_prefix = [&](int out_eid, int z) {
      Funnel& fv = funnels[static_cast<size_t>(g.edge(out_eid).head)];
      std::size_t pos = walk_pos.at(z);
      while (pos > 0 && !fv.contains_vertex(walk_vertices[pos])) {
        fv.add_edge(g, walk_edges[static_cast<size_t>(pos - 1)]);
        if (counters) counters->funnel_build_ops++;
        --pos;
      }
    };

    int y = u;
    while (prefix_head < prefix_queue.size()) {
      int back_edge = g.max_in_edge(y);
      if (back_edge == -1) {
        // P reached a source; every surviving path starts here.
        while (prefix_head < prefix_queue.size()) add_prefix(prefix_queue[prefix_head++], y);
        break;
      }
      int x = g.edge(back_edge).tail;
      walk_vertices.push_back(x);
      walk_edges.push_back(back_edge);
      walk_pos.emplace(x, walk_vertices.size() - 1);
      f[static_cast<size_t>(x)] -= star_weight;

      // Suffix stage: extend each neighbour's path with (x, y) while safe
      // and new.
      std::vector<int> still_suffix;
      for (int out_eid : suffix_set) {
        Rational fprime = f[static_cast<size_t>(x)] + g.edge(out_eid).weight;
        Funnel& fv = funnels[static_cast<size_t>(g.edge(out_eid).head)];
        if (fprime > 0 && !fv.contains_edge(back_edge)) {
          fv.add_edge(g, back_edge);
          if (counters) counters->funnel_build_ops++;
          still_suffix.push_back(out_eid);
        }
      }
      suffix_set = std::move(still_suffix);

      // Prefix stage: neighbours whose path just became unsafe start at y.
      while (prefix_head < prefix_queue.size() &&
             f[static_cast<size_t>(x)] + g.edge(prefix_queue[prefix_head]).weight <= 0) {
        add_prefix(prefix_queue[prefix_head++], y);
      }
      y = x;
    }

    // f[] is scratch; leave it clean for the next vertex.
    for (int x : walk_vertices) f[static_cast<size_t>(x)] = 0;
    for (int x : fu_vertices) f[static_cast<size_t>(x)] = 0;
  }
  return funnels;
}

ReportResult report_maximal(const FlowDAG& g, const Funnel& funnel, int u, Counters* counters) {
  ReportResult result;
  result.pruned = FunnelOverlay(g, funnel);
  if (funnel.empty()) return result;

  const std::vector<char> conv = funnel.converging_tree(g);
  MergeableHeap::Arena arena;
  std::vector<MergeableHeap> heaps(static_cast<size_t>(g.vertex_count()));
  for (auto& h : heaps) h = MergeableHeap(&arena, counters);

  // upd*: cost of the canonical right extension over the max-weight
  // out-edge of u. A sink has none; its paths are always right maximal.
  const int star = g.max_out_edge(u);
  const bool extendable_right = star != -1;
  const Rational upd_star = extendable_right ? g.f_out(u) - g.edge(star).weight : Rational(0);

  auto settle = [&](const HeapElement& el, int start_vertex) {
    Rational eff = el.effective();
    if (extendable_right && eff - upd_star > 0) {
      result.pruned.remove_with_extensions(g, el.edge);
    } else {
      result.solutions.push_back(SolutionTriplet{el.edge, start_vertex, eff});
    }
  };

  for (int eid : funnel.in_edges(u)) {
    heaps[static_cast<size_t>(g.edge(eid).tail)].push(
        HeapElement{eid, g.edge(eid).weight, Rational(0)});
  }

  for (int y : funnel.vertices_reverse_topo(g)) {
    if (y == u) continue;
    if (counters) counters->funnel_report_ops++;
    MergeableHeap& hy = heaps[static_cast<size_t>(y)];
    const std::vector<int>& ins = funnel.in_edges(y);
    if (ins.empty() || hy.empty()) continue;

    if (conv[static_cast<size_t>(y)]) {
      // Each element is one sink path of y; extend it along every in-edge
      // that keeps it safe, moving its characteristic edge to (x, y). An
      // element no extension keeps safe is a path starting at y.
      while (!hy.empty()) {
        HeapElement el = hy.extract_min();
        const Rational eff = el.effective();
        bool extended = false;
        for (int eid : ins) {
          if (counters) counters->funnel_report_ops++;
          const Edge& e = g.edge(eid);
          const Rational upd = g.f_in(y) - e.weight;
          if (eff - upd > 0) {
            if (conv[static_cast<size_t>(e.tail)]) {
              heaps[static_cast<size_t>(e.tail)].push(HeapElement{eid, eff - upd, Rational(0)});
            } else {
              heaps[static_cast<size_t>(e.tail)].push(HeapElement{eid, eff, upd});
            }
            extended = true;
          }
        }
        if (!extended) settle(el, y);
      }
    } else {
      // y heads a diverging subtree. A path no in-edge extends safely starts
      // at y; the rest extend along every in-edge, by lazy update and merge
      // for the cheapest one and by element copies for the others.
      int move_eid = -1;
      Rational upd_min;
      for (int eid : ins) {
        if (counters) counters->funnel_report_ops++;
        const Rational upd = g.f_in(y) - g.edge(eid).weight;
        if (move_eid == -1 || upd < upd_min) {
          upd_min = upd;
          move_eid = eid;
        }
      }
      while (!hy.empty() && hy.min_key() - upd_min <= 0) {
        settle(hy.extract_min(), y);
      }
      if (hy.empty()) continue;
      if (ins.size() > 1) {
        const std::vector<HeapElement> elems = hy.elements();
        for (int eid : ins) {
          if (eid == move_eid) continue;
          const Edge& e = g.edge(eid);
          const Rational upd = g.f_in(y) - e.weight;
          for (const HeapElement& el : elems) {
            const Rational eff = el.effective();
            if (eff - upd > 0) {
              heaps[static_cast<size_t>(e.tail)].push(HeapElement{el.edge, eff, upd});
            }
          }
        }
      }
      hy.lazy_add(upd_min);
      heaps[static_cast<size_t>(g.edge(move_eid).tail)].merge(hy);
    }
  }

  for (int v : funnel.funnel_sources()) {
    MergeableHeap& hv = heaps[static_cast<size_t>(v)];
    while (!hv.empty()) {
      settle(hv.extract_min(), v);
    }
  }
  return result;
}

namespace {

// All diverging-region walks from the characteristic edge's tail back to the
// start vertex, as reversed edge lists.
void prefix_walks(const FlowDAG& g, const Funnel& funnel, int cur, int start,
                  std::vector<int>& stack, std::vector<std::vector<int>>& out) {
  if (cur == start) {
    out.push_back(stack);
    return;
  }
  if (g.topo_position(cur) <= g.topo_position(start)) return;
  for (int eid : funnel.in_edges(cur)) {
    stack.push_back(eid);
    prefix_walks(g, funnel, g.edge(eid).tail, start, stack, out);
    stack.pop_back();
  }
}

// All converging-tree walks from the characteristic edge's head down to the
// funnel's end vertex; branching only over parallel siblings.
void suffix_walks(const FlowDAG& g, const Funnel& funnel, int cur,
                  std::vector<int>& stack, std::vector<std::vector<int>>& out) {
  if (cur == funnel.end_vertex()) {
    out.push_back(stack);
    return;
  }
  for (int eid : funnel.out_edges(cur)) {
    stack.push_back(eid);
    suffix_walks(g, funnel, g.edge(eid).head, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Path> expand_solutions(const FlowDAG& g, const Funnel& funnel,
                                   const SolutionTriplet& t) {
  if (!funnel.contains_edge(t.characteristic_edge))
    throw DanglingTripletError("characteristic edge not in funnel");
  const Edge& ce = g.edge(t.characteristic_edge);

  std::vector<std::vector<int>> prefixes, suffixes;
  std::vector<int> stack;
  prefix_walks(g, funnel, ce.tail, t.start_vertex, stack, prefixes);
  suffix_walks(g, funnel, ce.head, stack, suffixes);

  std::vector<Path> matches;
  for (const std::vector<int>& pre : prefixes) {
    for (const std::vector<int>& suf : suffixes) {
      Path p;
      p.edge_ids.assign(pre.rbegin(), pre.rend());
      p.edge_ids.push_back(t.characteristic_edge);
      p.edge_ids.insert(p.edge_ids.end(), suf.begin(), suf.end());
      if (excess_flow(g, p).value != t.excess) continue;
      // Left maximality: the max-weight sibling is the safest extension.
      const int best_in = g.max_in_edge(t.start_vertex);
      if (best_in != -1 &&
          t.excess - (g.f_in(t.start_vertex) - g.edge(best_in).weight) > 0) {
        continue;
      }
      matches.push_back(std::move(p));
    }
  }
  std::sort(matches.begin(), matches.end());
  matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
  return matches;
}

Path expand_solution(const FlowDAG& g, const Funnel& funnel, const SolutionTriplet& t) {
  std::vector<Path> matches = expand_solutions(g, funnel, t);
  if (matches.empty()) throw DanglingTripletError("no funnel path matches the triplet");
  return matches.front();
}

std::vector<std::pair<Path, Rational>> enumerate_funnel(const FlowDAG& g, Counters* counters) {
  std::vector<Funnel> funnels = build_funnels(g, counters);
  std::set<std::pair<Path, Rational>> seen;
  for (int u = 0; u < g.vertex_count(); ++u) {
    const Funnel& fu = funnels[static_cast<size_t>(u)];
    if (fu.empty()) continue;
    ReportResult rep = report_maximal(g, fu, u, counters);
    for (const SolutionTriplet& t : rep.solutions) {
      for (Path& p : expand_solutions(g, fu, t)) {
        seen.emplace(std::move(p), t.excess);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace safeflow
