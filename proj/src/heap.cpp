#include "safeflow/heap.hpp"

#include <vector>

namespace safeflow {

void MergeableHeap::count_op() {
  if (counters_) counters_->heap_ops++;
}

MergeableHeap::Node* MergeableHeap::meld(Node* a, Node* b) {
  if (!a) return b;
  if (!b) return a;
  if (b->elem.effective() < a->elem.effective()) std::swap(a, b);
  // Cancel a's outstanding pending before b joins its subtree, so the later
  // propagation leaves b unchanged.
  b->elem.upd -= a->pending;
  b->pending -= a->pending;
  b->sibling = a->child;
  a->child = b;
  return a;
}

void MergeableHeap::push(HeapElement elem) {
  Node& node = arena_->emplace_back();
  node.elem = std::move(elem);
  node.pending = 0;
  root_ = meld(root_, &node);
  count_op();
}

HeapElement MergeableHeap::peek_min() const {
  if (!root_) throw ExtractFromEmptyError();
  return root_->elem;
}

HeapElement MergeableHeap::extract_min() {
  if (!root_) throw ExtractFromEmptyError();
  Node* r = root_;
  // Propagate the pending delta one level down, then pair up the children.
  std::vector<Node*> kids;
  for (Node* c = r->child; c != nullptr;) {
    Node* next = c->sibling;
    c->elem.upd += r->pending;
    c->pending += r->pending;
    c->sibling = nullptr;
    kids.push_back(c);
    c = next;
  }
  Node* merged = nullptr;
  for (std::size_t i = 0; i + 1 < kids.size(); i += 2) {
    kids[i / 2] = meld(kids[i], kids[i + 1]);
  }
  if (kids.size() % 2 == 1) {
    kids[kids.size() / 2] = kids.back();
  }
  for (std::size_t count = (kids.size() + 1) / 2; count > 0; --count) {
    merged = meld(merged, kids[count - 1]);
  }
  root_ = merged;
  count_op();
  return r->elem;
}

void MergeableHeap::lazy_add(const Rational& delta) {
  if (!root_) return;
  root_->elem.upd += delta;
  root_->pending += delta;
}

std::vector<HeapElement> MergeableHeap::elements() const {
  std::vector<HeapElement> out;
  if (!root_) return out;
  // (node, pending owed by its ancestors) pairs.
  std::vector<std::pair<const Node*, Rational>> stack{{root_, Rational(0)}};
  while (!stack.empty()) {
    auto [n, owed] = stack.back();
    stack.pop_back();
    HeapElement el = n->elem;
    el.upd += owed;
    Rational child_owed = owed + n->pending;
    for (const Node* c = n->child; c != nullptr; c = c->sibling) {
      stack.emplace_back(c, child_owed);
    }
    out.push_back(std::move(el));
  }
  return out;
}

void MergeableHeap::merge(MergeableHeap& other) {
  if (other.root_ == nullptr) return;
  if (root_ != nullptr) count_op();  // trivial merges into empty heaps are free
  root_ = meld(root_, other.root_);
  other.root_ = nullptr;
}

}  // namespace safeflow
