#include "rrp/selfcheck.hpp"

#include <algorithm>
#include <cmath>

#include "rrp/evaluate.hpp"
#include "rrp/fbm.hpp"
#include "rrp/hopf.hpp"
#include "rrp/rough_path.hpp"
#include "rrp/scales.hpp"

namespace rrp {

namespace {

CheckResult make(const std::string& name, bool pass, const std::string& detail = "") {
  return {name, pass, detail};
}

bool hopf_axioms(std::string& detail) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n, 2)) {
      Forest f{t};
      using T3 = LinearComb<std::pair<std::pair<Forest, Forest>, Forest>>;
      T3 left, right;
      for (const auto& [p, c] : coproduct(f))
        for (const auto& [q, c2] : coproduct(p.first))
          left.add({{q.first, q.second}, p.second}, c * c2);
      for (const auto& [p, c] : coproduct(f))
        for (const auto& [q, c2] : coproduct(p.second))
          right.add({{p.first, q.first}, q.second}, c * c2);
      if (!(left == right)) {
        detail = "coassociativity fails on " + t.canonical_key();
        return false;
      }
      if (!antipode_check_left(f).empty() || !antipode_check_right(f).empty()) {
        detail = "antipode axiom fails on " + t.canonical_key();
        return false;
      }
    }
  return true;
}

bool word_axioms(std::string& detail) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& w : enumerate_words(n, 2)) {
      auto l = word_antipode_check_left(w);
      auto r = word_antipode_check_right(w);
      bool ok = n == 0 ? (l == LinearComb<Word>(Word{}) && r == LinearComb<Word>(Word{}))
                       : (l.empty() && r.empty());
      if (!ok) {
        detail = "word antipode axiom fails at length " + std::to_string(n);
        return false;
      }
    }
  return true;
}

bool theta_morphism(std::string& detail) {
  auto trees2 = enumerate_trees(2, 2);
  for (const auto& a : trees2)
    for (const auto& b : trees2)
      if (!(theta(forest_product(Forest{a}, Forest{b})) ==
            shuffle_product(theta(a), theta(b)))) {
        detail = "theta is not an algebra map";
        return false;
      }
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(n, 2)) {
      TensorShSh lhs, rhs;
      for (const auto& [p, c] : coproduct(t))
        for (const auto& [wl, cl] : theta(p.first))
          for (const auto& [wr, cr] : theta(p.second))
            lhs.add({wl, wr}, c * cl * cr);
      for (const auto& [w, c] : theta(t)) rhs.add(word_coproduct(w), c);
      if (!(lhs == rhs)) {
        detail = "theta is not a coalgebra map on " + t.canonical_key();
        return false;
      }
    }
  return true;
}

bool displayed_coproduct(std::string& detail) {
  auto cherry = DecoratedTree::node(1, {DecoratedTree::leaf(2), DecoratedTree::leaf(3)});
  if (coproduct(cherry).size() != 5) {
    detail = "cherry coproduct does not have 5 terms";
    return false;
  }
  LinearComb<Word> th;
  th.add(Word{1, 2, 3}, 1);
  th.add(Word{1, 3, 2}, 1);
  if (!(theta(cherry) == th)) {
    detail = "cherry theta mismatch";
    return false;
  }
  return true;
}

bool permutation_graph_resolution(std::string& detail) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      auto pg = permutation_graph(n, perm);
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[perm[i]] = i;
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      do {
        std::vector<int> rank(n);
        for (int i = 0; i < n; ++i) rank[order[i]] = i;
        bool chain = true;
        for (int k = 0; k + 1 < n; ++k)
          if (!(rank[inv[k]] < rank[inv[k + 1]])) chain = false;
        long long sum = 0;
        for (const auto& [f, c] : pg) {
          bool inside = true;
          for (int v = 0; v < n && inside; ++v)
            if (f.parent[v] >= 0 && !(rank[v] > rank[f.parent[v]])) inside = false;
          if (inside) sum += c.num();
        }
        if (sum != (chain ? 1 : 0)) {
          detail = "chain indicator not resolved at n=" + std::to_string(n);
          return false;
        }
      } while (std::next_permutation(order.begin(), order.end()));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

HalfDiagram example_half() {
  return build_half_diagram(HeapForest{{-1, 0, 1, 0}}, {});
}

ScaleAttribution attribution(int which) {
  ScaleAttribution mu;
  if (which == 1) {
    mu.j[{LineId::RootLeg, 0}] = 0;
    mu.j[{LineId::SigmaEdge, 1}] = 1;
    mu.j[{LineId::SigmaEdge, 2}] = 3;
    mu.j[{LineId::SigmaEdge, 3}] = 2;
    mu.j[{LineId::PhiLeg, 0}] = 2;
    mu.j[{LineId::PhiLeg, 1}] = 3;
    mu.j[{LineId::PhiLeg, 2}] = 3;
    mu.j[{LineId::PhiLeg, 3}] = 2;
  } else {
    mu.j[{LineId::RootLeg, 0}] = 3;
    mu.j[{LineId::SigmaEdge, 1}] = 0;
    mu.j[{LineId::SigmaEdge, 2}] = 2;
    mu.j[{LineId::SigmaEdge, 3}] = 3;
    mu.j[{LineId::PhiLeg, 0}] = 1;
    mu.j[{LineId::PhiLeg, 1}] = 2;
    mu.j[{LineId::PhiLeg, 2}] = 2;
    mu.j[{LineId::PhiLeg, 3}] = 3;
  }
  return mu;
}

bool omega_star_lists(std::string& detail) {
  SymmetricDiagram g{example_half()};
  auto s1 = omega_star_sequence(g, attribution(1));
  auto s2 = omega_star_sequence(g, attribution(2));
  auto eq = [](const OmegaStarEntry& e, long long a, long long b) {
    return e.value == DivergenceDegree{Rational(a), Rational(b)};
  };
  bool ok1 = s1.size() == 4 && eq(s1[0], -1, -4) && eq(s1[1], -4, -8) &&
             eq(s1[2], -1, -8) && eq(s1[3], 1, -8);
  bool ok2 = s2.size() == 4 && eq(s2[0], -1, -2) && eq(s2[1], -2, -6) &&
             eq(s2[2], -2, -8) && eq(s2[3], 1, -8);
  if (!ok1) detail = "first attribution list mismatch";
  if (!ok2) detail += std::string(ok1 ? "" : "; ") + "second attribution list mismatch";
  return ok1 && ok2;
}

bool forest_machinery(std::string& detail) {
  SymmetricDiagram g{example_half()};
  const auto& d = g.half;
  for (int which : {1, 2}) {
    auto mu = attribution(which);
    auto cls = classify_forest(d, {}, mu);
    std::vector<Subgraph> nodes;
    for (const auto& n : gn_tree(g, mu)) nodes.push_back(n.g);
    std::sort(nodes.begin(), nodes.end());
    auto ext = cls.extension;
    std::sort(ext.begin(), ext.end());
    if (!(nodes == ext)) {
      detail = "Ext(empty) != GN nodes";
      return false;
    }
    auto nd1 = nd_projection(d, nodes, mu);
    auto nd2 = nd_projection(d, nd1, mu);
    std::sort(nd1.begin(), nd1.end());
    std::sort(nd2.begin(), nd2.end());
    if (!(nd1 == nd2)) {
      detail = "ND not idempotent";
      return false;
    }
  }
  return true;
}

const PathModel& fixture_path() {
  static PathModel p = PathModel::generic(2, 2, 7);
  return p;
}

bool sector_reconstruction(std::string& detail) {
  for (const Word& w : {Word{1, 2}, Word{1, 2, 1}}) {
    auto full = tensor_atoms(fixture_path(), w);
    auto back = unsplit(split_measure(fixture_path(), w));
    if (back.size() != full.size()) {
      detail = "atom count mismatch";
      return false;
    }
    std::sort(back.begin(), back.end(),
              [](const SpectralAtom& a, const SpectralAtom& b) { return a.freq < b.freq; });
    std::sort(full.begin(), full.end(),
              [](const SpectralAtom& a, const SpectralAtom& b) { return a.freq < b.freq; });
    for (std::size_t i = 0; i < full.size(); ++i)
      if (back[i].freq != full[i].freq ||
          std::abs(back[i].weight - full[i].weight) > 1e-13) {
        detail = "reconstructed measure differs";
        return false;
      }
  }
  return true;
}

bool rough_path_smoke(std::string& detail) {
  const auto& p = fixture_path();
  SkeletonData sk(p);
  MockData mock(p, 77);
  RenormalizedData ren(p, 0.2);
  for (const auto& w : {Word{1}, Word{2, 1}, Word{1, 2, 2}})
    if (std::abs(chi(sk, w, 0.7) - skeleton_word(p, w, 0.7)) > 1e-9) {
      detail = "chi does not recombine to the skeleton";
      return false;
    }
  std::vector<Word> words;
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : enumerate_words(n, 2)) words.push_back(w);
  std::vector<std::pair<Word, Word>> pairs{{{1}, {2}}, {{1}, {1, 2}}, {{2, 1}, {1}}};
  for (const TreeData* data : {(const TreeData*)&sk, (const TreeData*)&mock,
                               (const TreeData*)&ren}) {
    for (const auto& w : words) {
      auto v = rough_path(*data, w, 0.25, 0.8);
      if (v.route_residual() > 1e-11) {
        detail = "shuffle/tree convolution routes disagree";
        return false;
      }
    }
    if (verify_chen(*data, words, 0.2, 0.45, 0.9) > 1e-10 ||
        verify_shuffle(*data, pairs, 0.2, 0.9) > 1e-10) {
      detail = "Chen or shuffle residual too large";
      return false;
    }
    for (int i : {1, 2}) {
      cplx j = rough_path_jchi(*data, Word{i}, 0.2, 0.9);
      if (std::abs(j - (p.gamma(i, 0.9) - p.gamma(i, 0.2))) > 1e-11) {
        detail = "level 1 is not the increment";
        return false;
      }
    }
  }
  return true;
}

bool fbm_smoke(std::string& detail, unsigned long long seed) {
  QuadratureConfig cfg;
  cfg.j_min = -26;
  cfg.j_max = 36;
  cfg.points_per_scale = 48;
  cfg.rng_seed = seed;
  for (double a : {0.2, 0.7}) {
    cfg.alpha = a;
    FbmSampler fbm(1, cfg);
    for (double s : {0.3, 0.9})
      for (double t : {0.5, 1.0}) {
        double expect = 0.5 * (std::pow(s, 2 * a) + std::pow(t, 2 * a) -
                               std::pow(std::abs(t - s), 2 * a));
        if (std::abs(fbm.grid_covariance(s, t) - expect) > 3e-3) {
          detail = "grid covariance off at alpha=" + std::to_string(a);
          return false;
        }
      }
  }
  return true;
}

bool estimator_determinism(std::string& detail, unsigned long long seed) {
  QuadratureConfig cfg;
  cfg.alpha = 0.2;
  cfg.j_min = -20;
  cfg.j_max = 24;
  cfg.mc_samples = 40000;
  cfg.rng_seed = seed;
  auto a = variance_J(Word{1, 2}, 0.3, 0.55, cfg);
  cfg.threads = 3;
  auto b = variance_J(Word{1, 2}, 0.3, 0.55, cfg);
  if (a.value != b.value) {
    detail = "estimates depend on the worker count";
    return false;
  }
  if (!(a.value > 0.0)) {
    detail = "variance estimate not positive";
    return false;
  }
  if (variance_J(Word{1}, 0.4, 0.4, cfg).value != 0.0) {
    detail = "Var J^{tt} != 0";
    return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> quick_checks() {
  std::vector<CheckResult> out;
  std::string d;
  auto run = [&](const char* name, bool (*fn)(std::string&)) {
    std::string detail;
    bool ok = fn(detail);
    out.push_back(make(name, ok, detail));
  };
  run("hopf-axioms-trees<=5", hopf_axioms);
  run("shuffle-hopf-axioms-words<=5", word_axioms);
  run("theta-hopf-morphism", theta_morphism);
  run("displayed-coproduct-and-theta", displayed_coproduct);
  run("permutation-graph-resolution", permutation_graph_resolution);
  run("omega-star-published-lists", omega_star_lists);
  run("forest-classification", forest_machinery);
  (void)d;
  return out;
}

std::vector<CheckResult> full_checks(unsigned long long seed) {
  auto out = quick_checks();
  std::string detail;
  bool ok = sector_reconstruction(detail);
  out.push_back(make("sector-reconstruction", ok, detail));
  detail.clear();
  ok = rough_path_smoke(detail);
  out.push_back(make("rough-path-routes-chen-shuffle", ok, detail));
  detail.clear();
  ok = fbm_smoke(detail, seed);
  out.push_back(make("fbm-grid-covariance", ok, detail));
  detail.clear();
  ok = estimator_determinism(detail, seed);
  out.push_back(make("estimator-determinism", ok, detail));
  return out;
}

}  // namespace rrp
