#pragma once

#include <map>
#include <vector>

#include "rrp/heap_forest.hpp"
#include "rrp/path_model.hpp"

namespace rrp {

/*
 * Closed-form iterated integrals of exponential atoms over forest domains
 *   x_v in (s, x_parent(v)), roots in (s, t).
 * Intermediate primitives are polynomials-times-exponentials; frequencies
 * are tracked as integer combinations of the pooled mode frequencies so
 * that "the same frequency" is decided exactly and resonant terms go to
 * the polynomial part instead of dividing by a tiny difference.
 */
class ExpPoly {
 public:
  using Combo = std::vector<int>;  // multiplicity per global frequency index

  explicit ExpPoly(int n_freqs) : nf_(n_freqs) {}
  static ExpPoly constant(int n_freqs, cplx c);
  static ExpPoly exponential(int n_freqs, int freq_idx, cplx c);  // c e^{i w x}

  ExpPoly operator*(const ExpPoly& o) const;
  ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

  // Primitive from s: F(x) = int_s^x f(y) dy.
  ExpPoly integrate_from(double s, const std::vector<double>& freqs) const;

  cplx eval(double x, const std::vector<double>& freqs) const;

 private:
  int nf_;
  std::map<Combo, std::vector<cplx>> terms_;  // combo -> poly coefficients in x
  void add_term(const Combo& combo, int power, cplx coeff);
  friend class IteratedIntegrator;
};

// I^{ts} of the atom with per-vertex frequency indices over the forest
// domain (vertices of f are labeled by position in `freq`).
cplx iterated_integral_atom(const PathModel& path, const LabeledForest& f,
                            const std::vector<int>& freq_by_vertex, double s, double t);
cplx iterated_integral_atom(const PathModel& path, const HeapForest& f,
                            const std::vector<int>& freq_by_vertex, double s, double t);

}  // namespace rrp
