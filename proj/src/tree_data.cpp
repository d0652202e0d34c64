#include "rrp/tree_data.hpp"

#include <cmath>
#include <cstring>

#include "rrp/errors.hpp"
#include "rrp/forests.hpp"
#include "rrp/trees.hpp"

namespace rrp {

cplx phi_forest_atom(const TreeData& data, const LabeledForest& forest,
                     const std::vector<int>& freq_by_label, double t) {
  cplx out(1.0, 0.0);
  for (const auto& comp : components(forest)) {
    std::vector<int> freq(comp.size());
    for (int i = 0; i < comp.size(); ++i) freq[i] = freq_by_label[comp.verts[i]];
    out *= data.tree_value(comp, freq, t);
  }
  return out;
}

cplx SkeletonData::tree_value(const LabeledForest& piece, const std::vector<int>& freq,
                              double t) const {
  return skeleton_atom(path(), piece, freq, t);
}

namespace {

unsigned long long mix64(unsigned long long x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double signed_unit(unsigned long long h) {
  return 2.0 * ((double)(h >> 11) / (double)(1ULL << 53)) - 1.0;
}

}  // namespace

cplx MockData::tree_value(const LabeledForest& piece, const std::vector<int>& freq,
                          double t) const {
  if (piece.size() == 1) {
    // condition (a): level 1 is the skeleton increment primitive
    return skeleton_atom(path(), piece, freq, t);
  }
  // canonical decorated shape: frequencies act as decorations, so the hash
  // is invariant under relabeling
  std::vector<int> par(piece.par.begin(), piece.par.end());
  auto canon = tree_from_parent_map(par, freq);
  unsigned long long h = salt_;
  for (char c : canon.canonical_key()) h = mix64(h ^ (unsigned long long)(unsigned char)c);
  unsigned long long tb;
  static_assert(sizeof(double) == sizeof(tb));
  std::memcpy(&tb, &t, sizeof(tb));
  h = mix64(h ^ tb);
  return cplx(signed_unit(h), signed_unit(mix64(h)));
}

cplx RenormalizedData::tree_value(const LabeledForest& piece, const std::vector<int>& freq,
                                  double t) const {
  const int n = piece.size();
  // zeta values: subtree frequency sums
  std::vector<double> zeta(n, 0.0);
  double total = 0.0;
  for (int v = 0; v < n; ++v) {
    double w = path().freq_value(freq[v]);
    total += w;
    for (int p = v; p >= 0; p = piece.par[p]) zeta[p] += w;
  }
  for (int v = 0; v < n; ++v)
    if (std::abs(zeta[v]) < 1e-12)
      throw DegenerateDenominator("renormalized skeleton denominator vanishes");

  if (n == 1) return skeleton_atom(path(), piece, freq, t);

  // the labels of a piece are heap-ordered, so par is a valid HeapForest
  HalfDiagram d = build_half_diagram(HeapForest{piece.par}, {});
  AmplitudeExpression expr = bphz_renormalize(d);

  double weights = 0.0;
  for (const auto& term : expr.terms) {
    double v = term.sign;
    for (const auto& f : term.factors) {
      double arg = 0.0;
      for (const auto& [k, c] : f.arg) arg += c.to_double() * zeta[k];
      if (f.kind == Factor::AbsHalfMinusAlpha)
        v *= std::pow(std::abs(arg), 0.5 - alpha_);
      // InvZeta factors keep their skeleton role below
    }
    weights += v;
  }

  cplx val = std::exp(cplx(0.0, total * t)) * weights;
  for (int v = 0; v < n; ++v) val /= cplx(0.0, zeta[v]);
  return val;
}

std::unique_ptr<TreeData> make_tree_data(const std::string& name, const PathModel& path,
                                         double alpha) {
  if (name == "skeleton") return std::make_unique<SkeletonData>(path);
  if (name == "mock") return std::make_unique<MockData>(path, 0x5eedULL);
  if (name == "renormalized") return std::make_unique<RenormalizedData>(path, alpha);
  throw std::invalid_argument("unknown tree data: " + name);
}

}  // namespace rrp
