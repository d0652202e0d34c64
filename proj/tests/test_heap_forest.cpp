#include "doctest.h"

#include "rrp/heap_forest.hpp"

using namespace rrp;

TEST_CASE("permutation graph of the identity is the trunk") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    auto pg = permutation_graph(n, id);
    CHECK(pg == LinearComb<HeapForest>(trunk_chain(n)));
  }
}

TEST_CASE("permutation graph for sigma = (1,2,3)->(2,3,1)") {
  // T^sigma = ladder(0,1).single(2) - root 0 with children {1,2}
  auto pg = permutation_graph(3, {1, 2, 0});

  HeapForest ladder_plus_single{{-1, 0, -1}};
  HeapForest cherry{{-1, 0, 0}};
  LinearComb<HeapForest> expect;
  expect.add(ladder_plus_single, 1);
  expect.add(cherry, -1);
  CHECK(pg == expect);
}

TEST_CASE("permutation graph output is heap-ordered with cancellation-free support") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      auto pg = permutation_graph(n, perm);
      CHECK(!pg.empty());
      for (const auto& [f, c] : pg) {
        CHECK(f.heap_ordered());
        CHECK(c.den() == 1);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("permutation graphs resolve the chain indicator exactly") {
  // Interpret forests as order indicators on generic reals and check that
  // the signed sum reproduces the chain domain pointwise, for every ordering
  // of the values. This is an exact finite model of the Fubini identity.
  const int n = 4;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    auto pg = permutation_graph(n, perm);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;

    std::vector<int> value_rank(n);  // value_rank[v] = position of x_v, 0 = largest
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    do {
      for (int i = 0; i < n; ++i) value_rank[order[i]] = i;
      // chain: x_{inv[0]} > x_{inv[1]} > ...
      bool chain = true;
      for (int k = 0; k + 1 < n; ++k)
        if (!(value_rank[inv[k]] < value_rank[inv[k + 1]])) chain = false;
      long long sum = 0;
      for (const auto& [f, c] : pg) {
        bool inside = true;
        for (int v = 0; v < n && inside; ++v)
          if (f.parent[v] >= 0 && !(value_rank[v] > value_rank[f.parent[v]]))
            inside = false;
        if (inside) sum += c.num();
      }
      CHECK(sum == (chain ? 1 : 0));
    } while (std::next_permutation(order.begin(), order.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("labeled antipode of a two-vertex ladder") {
  LabeledForest lad;
  lad.verts = {0, 1};
  lad.par = {-1, 0};
  auto s = antipode(lad);

  LabeledForest two_singles;
  two_singles.verts = {0, 1};
  two_singles.par = {-1, -1};
  LinearComb<LabeledForest> expect(lad, Rational(-1));
  expect.add(two_singles, 1);
  CHECK(s == expect);
}

TEST_CASE("wedge shifts labels") {
  HeapForest a{{-1, 0}};
  HeapForest b{{-1}};
  CHECK(wedge(a, b) == HeapForest{{-1, 0, -1}});
  CHECK(wedge(b, a) == HeapForest{{-1, -1, 1}});
}

TEST_CASE("heap forest count is n!") {
  CHECK(enumerate_heap_forests(1).size() == 1);
  CHECK(enumerate_heap_forests(2).size() == 2);
  CHECK(enumerate_heap_forests(3).size() == 6);
  CHECK(enumerate_heap_forests(4).size() == 24);
}
