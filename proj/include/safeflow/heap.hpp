#pragma once

#include <deque>
#include <utility>
#include <vector>

#include "safeflow/errors.hpp"
#include "safeflow/instrumentation.hpp"
#include "safeflow/rational.hpp"

namespace safeflow {

/// One safe path tracked during funnel reporting: its characteristic edge,
/// the excess flow before lazy updates (val), and the accumulated lazy
/// subtraction (upd). Effective excess = val - upd.
struct HeapElement {
  int edge;
  Rational val;
  Rational upd;

  Rational effective() const { return val - upd; }
};

/// Mergeable min-heap (pairing heap) ordered by effective excess, with O(1)
/// lazy addition to the upd of every element. Nodes live in an external
/// arena so heaps can be merged freely; the arena must outlive all heaps
/// built on it.
class MergeableHeap {
 public:
  struct Node {
    HeapElement elem;
    Rational pending;  // lazy upd delta owed to the child subtrees
    Node* child = nullptr;
    Node* sibling = nullptr;
  };
  using Arena = std::deque<Node>;

  MergeableHeap() = default;
  explicit MergeableHeap(Arena* arena, Counters* counters = nullptr)
      : arena_(arena), counters_(counters) {}

  bool empty() const { return root_ == nullptr; }

  void push(HeapElement elem);

  /// Smallest effective-excess element, with pending updates folded in.
  HeapElement peek_min() const;
  Rational min_key() const { return peek_min().effective(); }

  HeapElement extract_min();

  /// Adds delta to upd of every element (lowers every key by delta), O(1).
  void lazy_add(const Rational& delta);

  /// Moves all of other's elements into this heap; other becomes empty.
  void merge(MergeableHeap& other);

  /// Snapshot of all elements with pending updates folded in; heap order is
  /// not preserved. Used when a heap must be replicated along several edges.
  std::vector<HeapElement> elements() const;

 private:
  Node* meld(Node* a, Node* b);
  void count_op();

  Arena* arena_ = nullptr;
  Counters* counters_ = nullptr;
  Node* root_ = nullptr;
};

}  // namespace safeflow
