#include "doctest.h"

#include "rrp/hopf.hpp"
#include "rrp/words.hpp"

using namespace rrp;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("shuffle of (i1 i2) with (j1)") {
  auto lhs = shuffle_product(Word{1, 2}, Word{3});
  LinearComb<Word> expect;
  expect.add(Word{1, 2, 3}, 1);
  expect.add(Word{1, 3, 2}, 1);
  expect.add(Word{3, 1, 2}, 1);
  CHECK(lhs == expect);
}

TEST_CASE("shuffle unit and multiplicities") {
  Word w{1, 2, 1};
  CHECK(shuffle_product(w, Word{}) == LinearComb<Word>(w));

  // (1) shuffled with (1) = 2 (1 1)
  auto sq = shuffle_product(Word{1}, Word{1});
  CHECK(sq.coeff(Word{1, 1}) == Rational(2));

  // total multiplicity = binom(|u|+|v|, |u|) for all words up to length 4
  for (int nu = 0; nu <= 4; ++nu)
    for (int nv = 0; nv + nu <= 4; ++nv) {
      Word u, v;
      for (int i = 0; i < nu; ++i) u.push_back(1 + i % 2);
      for (int i = 0; i < nv; ++i) v.push_back(2 - i % 2);
      auto prod = shuffle_product(u, v);
      Rational total(0);
      for (const auto& [word, c] : prod) total += c;
      CHECK(total == Rational(binom(nu + nv, nu)));
    }
}

TEST_CASE("deconcatenation coproduct") {
  auto lhs = word_coproduct(Word{1, 2});
  TensorShSh expect;
  expect.add({Word{}, Word{1, 2}}, 1);
  expect.add({Word{1}, Word{2}}, 1);
  expect.add({Word{1, 2}, Word{}}, 1);
  CHECK(lhs == expect);
}

TEST_CASE("word antipode at length 1 matches the stated formula") {
  CHECK(word_antipode(Word{1}) == LinearComb<Word>(Word{1}, Rational(-1)));
}

TEST_CASE("antipode axiom on all words up to length 5, d = 2") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& w : enumerate_words(n, 2)) {
      auto left = word_antipode_check_left(w);
      auto right = word_antipode_check_right(w);
      if (n == 0) {
        CHECK(left == LinearComb<Word>(Word{}));
        CHECK(right == LinearComb<Word>(Word{}));
      } else {
        CHECK(left.empty());
        CHECK(right.empty());
      }
    }
}

TEST_CASE("plain reversal without the sign fails the axiom at even length") {
  // This is why the antipode is (-1)^n reverse rather than -reverse.
  Word w{1, 2};
  LinearComb<Word> bad;
  for (const auto& [pair, c] : word_coproduct(w)) {
    Word r(pair.first.rbegin(), pair.first.rend());
    LinearComb<Word> s(r, Rational(-1));
    if (pair.first.empty()) s = LinearComb<Word>(Word{});  // S(1) = 1
    for (const auto& [ws, cs] : s) bad.add(shuffle_product(ws, pair.second), c * cs);
  }
  CHECK(!bad.empty());
}

TEST_CASE("theta on the displayed cherry") {
  auto t = DecoratedTree::node(1, {DecoratedTree::leaf(2), DecoratedTree::leaf(3)});
  LinearComb<Word> expect;
  expect.add(Word{1, 2, 3}, 1);
  expect.add(Word{1, 3, 2}, 1);
  CHECK(theta(t) == expect);

  // ladder: single linear extension
  auto l = trunk_tree(Word{1, 2, 1});
  CHECK(theta(l) == LinearComb<Word>(Word{1, 2, 1}));
}

TEST_CASE("theta is an algebra and coalgebra map on small trees") {
  auto trees3 = enumerate_trees(3, 2);
  auto trees2 = enumerate_trees(2, 2);

  // algebra map: theta(t1.t2) = theta(t1) shuffle theta(t2)
  for (const auto& a : trees2)
    for (const auto& b : trees2) {
      auto lhs = theta(forest_product(Forest{a}, Forest{b}));
      auto rhs = shuffle_product(theta(a), theta(b));
      CHECK(lhs == rhs);
    }

  // coalgebra map: (theta x theta) Delta_H = Delta_Sh theta, trees <= 4 vertices
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(n, 2)) {
      TensorShSh lhs, rhs;
      for (const auto& [p, c] : coproduct(t))
        for (const auto& [wl, cl] : theta(p.first))
          for (const auto& [wr, cr] : theta(p.second))
            lhs.add({wl, wr}, c * cl * cr);
      for (const auto& [w, c] : theta(t))
        rhs.add(word_coproduct(w), c);
      CHECK(lhs == rhs);
    }
}
