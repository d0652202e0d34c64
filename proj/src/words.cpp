#include "rrp/words.hpp"

#include <functional>

namespace rrp {

namespace {

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j,
                 Word& cur, LinearComb<Word>& out) {
  if (i == u.size() && j == v.size()) {
    out.add(cur, Rational(1));
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LinearComb<Word> shuffle_product(const Word& u, const Word& v) {
  LinearComb<Word> out;
  Word cur;
  cur.reserve(u.size() + v.size());
  shuffle_rec(u, 0, v, 0, cur, out);
  return out;
}

LinearComb<Word> shuffle_product(const LinearComb<Word>& u, const LinearComb<Word>& v) {
  return u.bilinear(v, [](const Word& a, const Word& b) { return shuffle_product(a, b); });
}

TensorShSh word_coproduct(const Word& w) {
  TensorShSh out;
  for (std::size_t k = 0; k <= w.size(); ++k)
    out.add({Word(w.begin(), w.begin() + k), Word(w.begin() + k, w.end())}, Rational(1));
  return out;
}

LinearComb<Word> word_antipode(const Word& w) {
  Word r(w.rbegin(), w.rend());
  return LinearComb<Word>(r, Rational(w.size() % 2 ? -1 : 1));
}

LinearComb<Word> word_antipode(const LinearComb<Word>& x) {
  LinearComb<Word> out;
  for (const auto& [w, c] : x) out.add(word_antipode(w), c);
  return out;
}

LinearComb<Word> word_antipode_check_left(const Word& w) {
  LinearComb<Word> out;
  for (const auto& [pair, c] : word_coproduct(w)) {
    LinearComb<Word> s = word_antipode(pair.first);
    for (const auto& [ws, cs] : s)
      out.add(shuffle_product(ws, pair.second), c * cs);
  }
  return out;
}

LinearComb<Word> word_antipode_check_right(const Word& w) {
  LinearComb<Word> out;
  for (const auto& [pair, c] : word_coproduct(w)) {
    LinearComb<Word> s = word_antipode(pair.second);
    for (const auto& [ws, cs] : s)
      out.add(shuffle_product(pair.first, ws), c * cs);
  }
  return out;
}

LinearComb<Word> theta(const DecoratedTree& t) {
  TreeView view = to_view(t);
  const int n = view.size();
  std::vector<int> pending(n, 0);  // unplaced children count
  for (int v = 0; v < n; ++v)
    if (view.parent[v] >= 0) ++pending[view.parent[v]];

  LinearComb<Word> out;
  Word cur;
  std::vector<char> placed(n, 0);
  std::function<void()> rec = [&]() {
    if ((int)cur.size() == n) {
      out.add(cur, Rational(1));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int p = view.parent[v];
      if (p >= 0 && !placed[p]) continue;  // ancestors first: root-to-top words
      placed[v] = 1;
      cur.push_back(view.dec[v]);
      rec();
      cur.pop_back();
      placed[v] = 0;
    }
  };
  rec();
  return out;
}

LinearComb<Word> theta(const Forest& f) {
  LinearComb<Word> acc(Word{});
  for (const auto& t : f) acc = shuffle_product(acc, theta(t));
  return acc;
}

LinearComb<Word> theta(const LinearComb<Forest>& x) {
  LinearComb<Word> out;
  for (const auto& [f, c] : x) out.add(theta(f), c);
  return out;
}

DecoratedTree trunk_tree(const Word& w) {
  if (w.empty()) throw std::invalid_argument("trunk_tree: empty word");
  DecoratedTree t = DecoratedTree::leaf(w.back());
  for (int i = (int)w.size() - 2; i >= 0; --i)
    t = DecoratedTree::node(w[i], {t});
  return t;
}

std::vector<Word> enumerate_words(int n, int d) {
  std::vector<Word> out;
  Word cur(n, 1);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) { out.push_back(cur); return; }
    for (int a = 1; a <= d; ++a) { cur[pos] = a; rec(pos + 1); }
  };
  rec(0);
  return out;
}

}  // namespace rrp
