#include "safeflow/simple_enum.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "safeflow/errors.hpp"
#include "safeflow/safety.hpp"

namespace safeflow {
namespace {

/// Trie over edge-id sequences; insert() reports whether the sequence is new.
/// Edge ids (not vertex pairs) keep this correct under parallel edges.
class EdgeSeqTrie {
 public:
  bool insert(const std::vector<int>& seq, int first, int last) {
    Node* node = &root_;
    for (int i = first; i <= last; ++i) {
      auto [it, fresh] = node->next.try_emplace(seq[static_cast<size_t>(i)]);
      if (fresh) it->second = std::make_unique<Node>();
      node = it->second.get();
    }
    bool fresh = !node->terminal;
    node->terminal = true;
    return fresh;
  }

 private:
  struct Node {
    std::map<int, std::unique_ptr<Node>> next;
    bool terminal = false;
  };
  Node root_;
};

// Both canonical one-edge extensions (max-weight in-sibling at the start,
// max-weight out-sibling at the end) must be unsafe for a window to be
// globally maximal.
bool canonically_extendable(const FlowDAG& g, const Path& host, const SafeWindow& w) {
  int first_tail = g.edge(host.edge_ids[static_cast<size_t>(w.first_edge)]).tail;
  int left = g.max_in_edge(first_tail);
  if (left != -1) {
    Rational ext = w.excess - (g.f_in(first_tail) - g.edge(left).weight);
    if (ext > 0) return true;
  }
  int last_head = g.edge(host.edge_ids[static_cast<size_t>(w.last_edge)]).head;
  int right = g.max_out_edge(last_head);
  if (right != -1) {
    Rational ext = w.excess - (g.f_out(last_head) - g.edge(right).weight);
    if (ext > 0) return true;
  }
  return false;
}

}  // namespace

std::uint64_t ConciseRepresentation::total_length() const {
  std::uint64_t total = 0;
  for (const CompactPath& cp : paths) total += static_cast<std::uint64_t>(cp.path.length());
  return total;
}

std::vector<std::pair<Path, Rational>> ConciseRepresentation::expand(const FlowDAG&) const {
  std::vector<std::pair<Path, Rational>> out;
  for (const CompactPath& cp : paths) {
    for (const SafeWindow& w : cp.intervals) {
      Path p;
      p.edge_ids.assign(cp.path.edge_ids.begin() + w.first_edge,
                        cp.path.edge_ids.begin() + w.last_edge + 1);
      out.emplace_back(std::move(p), w.excess);
    }
  }
  return out;
}

std::vector<SafeWindow> maximal_safe_in_path(const FlowDAG& g, const Path& p,
                                             Counters* counters) {
  validate_path(g, p);
  const int len = p.length();
  auto weight = [&](int idx) -> const Rational& {
    return g.edge(p.edge_ids[static_cast<size_t>(idx)]).weight;
  };
  // Excess delta of appending edge idx: f_out of its tail minus its weight.
  auto append_cost = [&](int idx) {
    return g.f_out(g.edge(p.edge_ids[static_cast<size_t>(idx)]).tail) - weight(idx);
  };
  // Excess delta of dropping the leftmost edge idx: f_in of its head minus
  // its weight, added back.
  auto drop_gain = [&](int idx) {
    return g.f_in(g.edge(p.edge_ids[static_cast<size_t>(idx)]).head) - weight(idx);
  };

  std::vector<SafeWindow> out;
  int i = 0, j = 0;
  Rational excess = weight(0);
  int last_reported_j = -1;
  for (;;) {
    while (j + 1 < len) {
      Rational extended = excess - append_cost(j + 1);
      if (extended <= 0) break;
      ++j;
      excess = extended;
      if (counters) counters->simple_ops++;
    }
    if (j > last_reported_j) {
      out.push_back(SafeWindow{i, j, excess});
      last_reported_j = j;
    }
    if (j + 1 >= len) break;
    // Shrink from the left until the right extension becomes safe.
    bool extended = false;
    while (i < j) {
      excess += drop_gain(i);
      ++i;
      if (counters) counters->simple_ops++;
      Rational ext = excess - append_cost(j + 1);
      if (ext > 0) {
        ++j;
        excess = ext;
        extended = true;
        if (counters) counters->simple_ops++;
        break;
      }
    }
    if (!extended) {
      // Even the single edge j cannot extend; restart at j + 1.
      ++j;
      i = j;
      excess = weight(j);
      if (counters) counters->simple_ops += 2;  // both pointers advance
    }
  }
  return out;
}

ConciseRepresentation enumerate_simple(const FlowDAG& g, Counters* counters) {
  FlowDecomposition decomp = decompose(g, counters);
  EdgeSeqTrie trie;
  ConciseRepresentation out;

  for (const WeightedPath& wp : decomp.paths) {
    std::vector<SafeWindow> windows = maximal_safe_in_path(g, wp.path, counters);
    std::vector<SafeWindow> kept;
    for (const SafeWindow& w : windows) {
      if (canonically_extendable(g, wp.path, w)) continue;
      if (!trie.insert(wp.path.edge_ids, w.first_edge, w.last_edge)) continue;
      kept.push_back(w);
    }
    // Union overlapping windows into minimal-length compact paths.
    std::size_t idx = 0;
    while (idx < kept.size()) {
      std::size_t end = idx;
      int hi = kept[idx].last_edge;
      while (end + 1 < kept.size() && kept[end + 1].first_edge <= hi) {
        ++end;
        hi = std::max(hi, kept[end].last_edge);
      }
      CompactPath cp;
      int base = kept[idx].first_edge;
      cp.path.edge_ids.assign(wp.path.edge_ids.begin() + base,
                              wp.path.edge_ids.begin() + hi + 1);
      for (std::size_t t = idx; t <= end; ++t) {
        cp.intervals.push_back(
            SafeWindow{kept[t].first_edge - base, kept[t].last_edge - base, kept[t].excess});
      }
      out.paths.push_back(std::move(cp));
      idx = end + 1;
    }
  }
  return out;
}

}  // namespace safeflow
