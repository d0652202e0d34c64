#include "rrp/iterated.hpp"

#include <cmath>
#include <functional>

namespace rrp {

ExpPoly ExpPoly::constant(int n_freqs, cplx c) {
  ExpPoly p(n_freqs);
  p.add_term(Combo(n_freqs, 0), 0, c);
  return p;
}

ExpPoly ExpPoly::exponential(int n_freqs, int freq_idx, cplx c) {
  ExpPoly p(n_freqs);
  Combo combo(n_freqs, 0);
  combo[freq_idx] = 1;
  p.add_term(combo, 0, c);
  return p;
}

void ExpPoly::add_term(const Combo& combo, int power, cplx coeff) {
  if (coeff == cplx(0.0, 0.0)) return;
  auto& poly = terms_[combo];
  if ((int)poly.size() <= power) poly.resize(power + 1, cplx(0.0, 0.0));
  poly[power] += coeff;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
  ExpPoly r(nf_);
  for (const auto& [ca, pa] : terms_)
    for (const auto& [cb, pb] : o.terms_) {
      Combo c(nf_);
      for (int i = 0; i < nf_; ++i) c[i] = ca[i] + cb[i];
      for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
          r.add_term(c, (int)(i + j), pa[i] * pb[j]);
    }
  return r;
}

static double combo_value(const ExpPoly::Combo& c, const std::vector<double>& freqs) {
  double w = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) w += c[i] * freqs[i];
  return w;
}

static bool combo_zero(const ExpPoly::Combo& c) {
  for (int x : c)
    if (x != 0) return false;
  return true;
}

ExpPoly ExpPoly::integrate_from(double s, const std::vector<double>& freqs) const {
  ExpPoly r(nf_);
  const Combo zero(nf_, 0);
  for (const auto& [combo, poly] : terms_) {
    if (combo_zero(combo)) {
      // int_s^x y^k dy
      double sk = s;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        cplx c = poly[k] / double(k + 1);
        r.add_term(zero, (int)k + 1, c);
        r.add_term(zero, 0, -c * sk);
        sk *= s;
      }
      continue;
    }
    const cplx iw(0.0, combo_value(combo, freqs));
    // primitive e^{iwy} sum b_k y^k with iw b_k + (k+1) b_{k+1} = a_k
    std::vector<cplx> b(poly.size(), cplx(0.0, 0.0));
    for (int k = (int)poly.size() - 1; k >= 0; --k) {
      cplx a = poly[k];
      if (k + 1 < (int)poly.size()) a -= double(k + 1) * b[k + 1];
      b[k] = a / iw;
    }
    cplx at_s(0.0, 0.0);
    double sk = 1.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      at_s += b[k] * sk;
      sk *= s;
    }
    at_s *= std::exp(iw * s);
    for (std::size_t k = 0; k < b.size(); ++k) r.add_term(combo, (int)k, b[k]);
    r.add_term(zero, 0, -at_s);
  }
  return r;
}

cplx ExpPoly::eval(double x, const std::vector<double>& freqs) const {
  cplx out(0.0, 0.0);
  for (const auto& [combo, poly] : terms_) {
    cplx p(0.0, 0.0);
    double xk = 1.0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      p += poly[k] * xk;
      xk *= x;
    }
    out += p * std::exp(cplx(0.0, combo_value(combo, freqs)) * x);
  }
  return out;
}

cplx iterated_integral_atom(const PathModel& path, const LabeledForest& f,
                            const std::vector<int>& freq_by_vertex, double s, double t) {
  const int n = f.size();
  const int nf = path.n_freqs();
  std::vector<double> freqs(nf);
  for (int i = 0; i < nf; ++i) freqs[i] = path.freq_value(i);

  std::vector<std::vector<int>> children(n);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) {
    if (f.par[v] < 0)
      roots.push_back(v);
    else
      children[f.par[v]].push_back(v);
  }

  // vertices come parent-before-child? not guaranteed for LabeledForest;
  // evaluate recursively instead
  std::vector<ExpPoly> prim(n, ExpPoly(nf));
  std::function<void(int)> build = [&](int v) {
    ExpPoly integrand = ExpPoly::exponential(nf, freq_by_vertex[v], cplx(1.0, 0.0));
    for (int w : children[v]) {
      build(w);
      integrand *= prim[w];
    }
    prim[v] = integrand.integrate_from(s, freqs);
  };

  cplx out(1.0, 0.0);
  for (int r : roots) {
    build(r);
    out *= prim[r].eval(t, freqs);
  }
  return out;
}

cplx iterated_integral_atom(const PathModel& path, const HeapForest& f,
                            const std::vector<int>& freq_by_vertex, double s, double t) {
  return iterated_integral_atom(path, as_labeled(f), freq_by_vertex, s, t);
}

}  // namespace rrp
