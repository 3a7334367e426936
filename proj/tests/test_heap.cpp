#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "safeflow/heap.hpp"

using namespace safeflow;

namespace {

// Reference model: a plain vector of (edge, effective key) pairs.
struct Model {
  std::vector<std::pair<int, Rational>> items;

  void push(int edge, const Rational& key) { items.emplace_back(edge, key); }

  std::pair<int, Rational> extract_min() {
    auto it = std::min_element(items.begin(), items.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
    auto out = *it;
    items.erase(it);
    return out;
  }

  void lazy_add(const Rational& delta) {
    for (auto& [edge, key] : items) key -= delta;
  }

  void merge(Model& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    other.items.clear();
  }
};

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("push and extract-min return keys in sorted order") {
  MergeableHeap::Arena arena;
  MergeableHeap h(&arena);
  for (int v : {5, 1, 4, 1, 3}) h.push({v, Rational(v), Rational(0)});
  std::vector<int> order;
  while (!h.empty()) order.push_back(static_cast<int>(h.extract_min().effective()));
  CHECK(order == std::vector<int>{1, 1, 3, 4, 5});
}

TEST_CASE("extract from an empty heap throws") {
  MergeableHeap::Arena arena;
  MergeableHeap h(&arena);
  CHECK_THROWS_AS(h.extract_min(), ExtractFromEmptyError);
  CHECK_THROWS_AS(h.peek_min(), ExtractFromEmptyError);
}

TEST_CASE("lazy_add lowers every key at once") {
  MergeableHeap::Arena arena;
  MergeableHeap h(&arena);
  h.push({0, Rational(10), Rational(0)});
  h.push({1, Rational(7), Rational(0)});
  h.lazy_add(Rational(3));
  CHECK(h.min_key() == 4);
  h.push({2, Rational(5), Rational(0)});  // pushed after: unaffected
  CHECK(h.extract_min().effective() == 4);
  CHECK(h.extract_min().effective() == 5);
  CHECK(h.extract_min().effective() == 7);
}

TEST_CASE("merge keeps pending updates on the correct side") {
  MergeableHeap::Arena arena;
  MergeableHeap a(&arena), b(&arena);
  a.push({0, Rational(10), Rational(0)});
  a.push({1, Rational(8), Rational(0)});
  a.lazy_add(Rational(5));  // a's keys: 5, 3
  b.push({2, Rational(4), Rational(0)});
  b.push({3, Rational(6), Rational(0)});
  a.merge(b);
  CHECK(b.empty());
  std::vector<int> order;
  while (!a.empty()) order.push_back(static_cast<int>(a.extract_min().effective()));
  CHECK(order == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("elements snapshot folds pending updates in") {
  MergeableHeap::Arena arena;
  MergeableHeap h(&arena);
  h.push({0, Rational(10), Rational(0)});
  h.push({1, Rational(8), Rational(0)});
  h.lazy_add(Rational(2));
  h.push({2, Rational(1), Rational(0)});
  std::vector<Rational> keys;
  for (const HeapElement& el : h.elements()) keys.push_back(el.effective());
  std::sort(keys.begin(), keys.end());
  REQUIRE(keys.size() == 3);
  CHECK(keys == std::vector<Rational>{Rational(1), Rational(6), Rational(8)});
  // Snapshot must not disturb the heap itself.
  CHECK(h.min_key() == 1);
}

TEST_CASE("randomized operations agree with the reference model") {
  std::uint64_t state = 42;
  for (int round = 0; round < 30; ++round) {
    MergeableHeap::Arena arena;
    std::vector<MergeableHeap> heaps;
    std::vector<Model> models;
    for (int i = 0; i < 4; ++i) {
      heaps.emplace_back(&arena);
      models.emplace_back();
    }
    int next_edge = 0;
    for (int step = 0; step < 400; ++step) {
      std::size_t i = splitmix(state) % heaps.size();
      switch (splitmix(state) % 5) {
        case 0:
        case 1: {
          Rational key(static_cast<int>(splitmix(state) % 97) - 30);
          heaps[i].push({next_edge, key, Rational(0)});
          models[i].push(next_edge, key);
          ++next_edge;
          break;
        }
        case 2: {
          if (models[i].items.empty()) {
            CHECK(heaps[i].empty());
            break;
          }
          HeapElement got = heaps[i].extract_min();
          auto want = models[i].extract_min();
          CHECK(got.effective() == want.second);
          break;
        }
        case 3: {
          Rational delta(static_cast<int>(splitmix(state) % 9) - 4);
          heaps[i].lazy_add(delta);
          models[i].lazy_add(delta);
          break;
        }
        case 4: {
          std::size_t j = splitmix(state) % heaps.size();
          if (j == i) break;
          heaps[i].merge(heaps[j]);
          models[i].merge(models[j]);
          break;
        }
      }
    }
    // Drain everything; the multisets of keys must coincide.
    for (std::size_t i = 0; i < heaps.size(); ++i) {
      std::vector<Rational> got, want;
      while (!heaps[i].empty()) got.push_back(heaps[i].extract_min().effective());
      for (const auto& [edge, key] : models[i].items) want.push_back(key);
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("heap op counter covers push, extract and real merges") {
  MergeableHeap::Arena arena;
  Counters c;
  MergeableHeap a(&arena, &c), b(&arena, &c);
  a.push({0, Rational(1), Rational(0)});
  b.push({1, Rational(2), Rational(0)});
  CHECK(c.heap_ops == 2);
  a.merge(b);  // both non-empty: counts
  CHECK(c.heap_ops == 3);
  MergeableHeap empty_heap(&arena, &c);
  a.merge(empty_heap);  // no-op merge: free
  CHECK(c.heap_ops == 3);
  a.extract_min();
  CHECK(c.heap_ops == 4);
}

TEST_CASE("ties between equal keys are all eventually reported") {
  MergeableHeap::Arena arena;
  MergeableHeap h(&arena);
  for (int i = 0; i < 5; ++i) h.push({i, Rational(7), Rational(0)});
  std::vector<int> edges;
  while (!h.empty()) edges.push_back(h.extract_min().edge);
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<int>{0, 1, 2, 3, 4});
}
