#include "rrp/skeleton.hpp"

#include <cmath>

#include "rrp/errors.hpp"

namespace rrp {

cplx skeleton_atom(const PathModel& path, const LabeledForest& f,
                   const std::vector<int>& freq_by_vertex, double t) {
  const int n = f.size();
  std::vector<double> subtree_sum(n, 0.0);
  double total = 0.0;
  for (int v = 0; v < n; ++v) {
    double w = path.freq_value(freq_by_vertex[v]);
    total += w;
    for (int p = v; p >= 0; p = f.par[p]) subtree_sum[p] += w;
  }
  cplx val = std::exp(cplx(0.0, total * t));
  for (int v = 0; v < n; ++v) {
    if (std::abs(subtree_sum[v]) < 1e-12)
      throw DegenerateDenominator("skeleton denominator vanishes");
    val /= cplx(0.0, subtree_sum[v]);
  }
  return val;
}

cplx skeleton_integral(const PathModel& path, const HeapForest& f,
                       const SectorMeasure& measure, double t) {
  LabeledForest lf = as_labeled(f);
  cplx out(0.0, 0.0);
  for (const auto& atom : measure.atoms)
    out += atom.weight * skeleton_atom(path, lf, atom.freq, t);
  return out;
}

cplx skeleton_word(const PathModel& path, const Word& w, double t) {
  HeapForest trunk = trunk_chain((int)w.size());
  LabeledForest lf = as_labeled(trunk);
  cplx out(0.0, 0.0);
  for (const auto& atom : tensor_atoms(path, w))
    out += atom.weight * skeleton_atom(path, lf, atom.freq, t);
  return out;
}

}  // namespace rrp
