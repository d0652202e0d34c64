#include "doctest.h"

#include "rrp/hopf.hpp"

using namespace rrp;

namespace {

DecoratedTree cherry(int a, int b, int c) {
  return DecoratedTree::node(a, {DecoratedTree::leaf(b), DecoratedTree::leaf(c)});
}

DecoratedTree ladder3(int a, int b, int c) {
  return DecoratedTree::node(a, {DecoratedTree::node(b, {DecoratedTree::leaf(c)})});
}

}  // namespace

TEST_CASE("admissible cuts of small trees") {
  auto single = DecoratedTree::leaf(1);
  CHECK(admissible_cuts(to_view(single)).size() == 2);  // {} and {root}

  // root with two children: {}, {root}, {b}, {c}, {b,c}
  CHECK(admissible_cuts(to_view(cherry(1, 2, 2))).size() == 5);

  // ladder: brute force over all 2^3 subsets of a 3-chain
  auto view = to_view(ladder3(1, 2, 1));
  int expect = 0;
  for (int mask = 0; mask < 8; ++mask) {
    bool ok = true;
    for (int v = 0; v < 3 && ok; ++v)
      for (int w = v + 1; w < 3 && ok; ++w)
        if ((mask >> v & 1) && (mask >> w & 1) &&
            (view.is_ancestor(v, w) || view.is_ancestor(w, v)))
          ok = false;
    expect += ok;
  }
  CHECK((int)admissible_cuts(view).size() == expect);
  CHECK(expect == 4);  // {}, {0}, {1}, {2} only: any two chain vertices are connected
}

TEST_CASE("coproduct of the cherry matches the displayed five terms") {
  auto t = cherry(1, 2, 3);
  auto lhs = coproduct(t);

  TensorHH expect;
  Forest T{t}, empty{};
  expect.add({T, empty}, 1);
  expect.add({empty, T}, 1);
  expect.add({Forest{DecoratedTree::node(1, {DecoratedTree::leaf(2)})},
              Forest{DecoratedTree::leaf(3)}}, 1);
  expect.add({Forest{DecoratedTree::node(1, {DecoratedTree::leaf(3)})},
              Forest{DecoratedTree::leaf(2)}}, 1);
  expect.add({Forest{DecoratedTree::leaf(1)},
              make_forest({DecoratedTree::leaf(2), DecoratedTree::leaf(3)})}, 1);
  CHECK(lhs == expect);
}

TEST_CASE("coproduct of a single vertex") {
  auto t = DecoratedTree::leaf(2);
  auto lhs = coproduct(t);
  TensorHH expect;
  expect.add({Forest{t}, Forest{}}, 1);
  expect.add({Forest{}, Forest{t}}, 1);
  CHECK(lhs == expect);
}

TEST_CASE("antipode base cases") {
  auto a = DecoratedTree::leaf(1);
  CHECK(antipode(a) == LinearComb<Forest>(Forest{a}, Rational(-1)));

  // ladder a-b: S = -(a-b) + (a)(b)
  auto ab = DecoratedTree::node(1, {DecoratedTree::leaf(2)});
  LinearComb<Forest> expect(Forest{ab}, Rational(-1));
  expect.add(make_forest({DecoratedTree::leaf(1), DecoratedTree::leaf(2)}), 1);
  CHECK(antipode(ab) == expect);
}

TEST_CASE("coassociativity and antipode axiom, all decorated trees <= 5 vertices, d = 2") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n, 2)) {
      Forest f{t};
      // (Delta x id) Delta == (id x Delta) Delta
      using T3 = LinearComb<std::pair<std::pair<Forest, Forest>, Forest>>;
      T3 left, right;
      for (const auto& [p, c] : coproduct(f))
        for (const auto& [q, c2] : coproduct(p.first))
          left.add({{q.first, q.second}, p.second}, c * c2);
      for (const auto& [p, c] : coproduct(f))
        for (const auto& [q, c2] : coproduct(p.second))
          right.add({{p.first, q.first}, q.second}, c * c2);
      CHECK(left == right);

      // m(S x id)Delta = eta eps = m(id x S)Delta; trees have eps = 0
      CHECK(antipode_check_left(f).empty());
      CHECK(antipode_check_right(f).empty());
    }
  }
}

TEST_CASE("canonical key invariant under relabeling") {
  // same tree, three different vertex orderings
  auto t1 = tree_from_parent_map({-1, 0, 1, 0}, {1, 2, 1, 2});
  auto t2 = tree_from_parent_map({1, -1, 1, 2}, {2, 1, 2, 1});  // root moved to id 1
  CHECK(t1.canonical_key() == t2.canonical_key());
  CHECK(t1 == t2);

  auto t3 = tree_from_parent_map({-1, 0, 1, 0}, {1, 2, 2, 1});  // different decorations
  CHECK(!(t1 == t3));
}

TEST_CASE("tree_from_parent_map validation") {
  CHECK_THROWS(tree_from_parent_map({0, 1}, {1, 1}));          // cycle/self-parent
  CHECK_THROWS(tree_from_parent_map({-1, -1}, {1, 1}));        // two roots
  CHECK_THROWS(tree_from_parent_map({-1, 5}, {1, 1}));         // bad index
}
