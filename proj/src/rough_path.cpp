#include "rrp/rough_path.hpp"

#include <cmath>

namespace rrp {

namespace {

// phi evaluated on a heap forest against a sector measure
cplx phi_on_sector(const TreeData& data, const HeapForest& f, const SectorMeasure& sec,
                   double t) {
  LabeledForest lf = as_labeled(f);
  cplx out(0.0, 0.0);
  for (const auto& atom : sec.atoms)
    out += atom.weight * phi_forest_atom(data, lf, atom.freq, t);
  return out;
}

}  // namespace

std::vector<ConvTerm> tree_convolution_terms(const LabeledForest& tree) {
  std::vector<ConvTerm> out;
  for (const auto& cut : admissible_cuts(tree)) {
    auto [roo, lea] = cut_split(tree, cut);
    for (const auto& [sf, c] : antipode(lea))
      out.push_back({c.to_double(), roo, sf});
  }
  return out;
}

cplx chi(const TreeData& data, const Word& word, double t) {
  if (word.empty()) return cplx(1.0, 0.0);
  const int n = (int)word.size();
  cplx out(0.0, 0.0);
  for (const auto& [sigma, sec] : split_measure(data.path(), word)) {
    for (const auto& [forest, coef] : permutation_graph(n, sigma))
      out += coef.to_double() * phi_on_sector(data, forest, sec, t);
  }
  return out;
}

cplx rough_path_jchi(const TreeData& data, const Word& word, double s, double t) {
  const int n = (int)word.size();
  cplx out(0.0, 0.0);
  for (int k = 0; k <= n; ++k) {
    Word head(word.begin(), word.begin() + k);
    Word tail(word.begin() + k, word.end());
    std::reverse(tail.begin(), tail.end());
    double sign = (n - k) % 2 ? -1.0 : 1.0;
    out += chi(data, head, t) * sign * chi(data, tail, s);
  }
  return out;
}

cplx rough_path_jphi(const TreeData& data, const Word& word, double s, double t) {
  const int n = (int)word.size();
  if (n == 0) return cplx(1.0, 0.0);
  cplx out(0.0, 0.0);
  for (const auto& [sigma, sec] : split_measure(data.path(), word)) {
    for (const auto& [forest, coef] : permutation_graph(n, sigma)) {
      // the convolution factorizes over the trees of the forest
      std::vector<std::vector<ConvTerm>> per_tree;
      for (const auto& tree : components(as_labeled(forest)))
        per_tree.push_back(tree_convolution_terms(tree));

      cplx sector_sum(0.0, 0.0);
      for (const auto& atom : sec.atoms) {
        cplx prod(1.0, 0.0);
        for (const auto& terms : per_tree) {
          cplx conv(0.0, 0.0);
          for (const auto& ct : terms)
            conv += ct.coef * phi_forest_atom(data, ct.roo, atom.freq, t) *
                    phi_forest_atom(data, ct.lea_antipode, atom.freq, s);
          prod *= conv;
        }
        sector_sum += atom.weight * prod;
      }
      out += coef.to_double() * sector_sum;
    }
  }
  return out;
}

RoughPathValue rough_path(const TreeData& data, const Word& word, double s, double t) {
  RoughPathValue v;
  v.word = word;
  v.s = s;
  v.t = t;
  v.value = rough_path_jchi(data, word, s, t);
  v.value_tree_route = rough_path_jphi(data, word, s, t);
  return v;
}

double verify_chen(const TreeData& data, const std::vector<Word>& words, double s,
                   double u, double t) {
  double worst = 0.0;
  for (const auto& w : words) {
    cplx lhs = rough_path_jchi(data, w, s, t);
    cplx rhs(0.0, 0.0);
    for (std::size_t k = 0; k <= w.size(); ++k) {
      Word head(w.begin(), w.begin() + k);
      Word tail(w.begin() + k, w.end());
      rhs += rough_path_jchi(data, head, u, t) * rough_path_jchi(data, tail, s, u);
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double verify_shuffle(const TreeData& data,
                      const std::vector<std::pair<Word, Word>>& pairs, double s,
                      double t) {
  double worst = 0.0;
  for (const auto& [u, v] : pairs) {
    cplx lhs = rough_path_jchi(data, u, s, t) * rough_path_jchi(data, v, s, t);
    cplx rhs(0.0, 0.0);
    for (const auto& [w, c] : shuffle_product(u, v))
      rhs += c.to_double() * rough_path_jchi(data, w, s, t);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace rrp
