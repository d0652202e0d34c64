#include "rrp/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rrp/errors.hpp"
#include "rrp/fbm.hpp"
#include "rrp/rough_path.hpp"

namespace rrp {

namespace {

// Resolves the pair constraints in the zeta routing: non-root sigma
// momenta are free except one pivot per contraction; pivots are expressed
// through the remaining variables and the external root momenta.
struct Routing {
  std::vector<int> free_vars;                 // zeta symbols sampled by MC
  std::vector<std::pair<int, MomentumForm>> solved;  // pivot -> form over free+roots
  int dims() const { return (int)free_vars.size(); }
};

Routing make_routing(const HalfDiagram& d) {
  Routing r;
  std::vector<MomentumForm> cons = d.constraints();
  std::vector<char> is_pivot(d.n(), 0), is_root(d.n(), 0);
  for (int v : d.roots) is_root[v] = 1;

  // eliminate one internal symbol per constraint
  for (auto& c : cons) {
    int pivot = -1;
    for (const auto& [k, coef] : c)
      if (!is_root[k] && !is_pivot[k]) { pivot = k; break; }
    if (pivot < 0) continue;  // constraint on externals only (hidden delta)
    Rational pc = c.at(pivot);
    MomentumForm rest;
    for (const auto& [k, coef] : c)
      if (k != pivot) rest.emplace(k, Rational(0) - coef / pc);
    is_pivot[pivot] = 1;
    // substitute into the other constraints
    for (auto& c2 : cons) {
      if (&c2 == &c) continue;
      auto it = c2.find(pivot);
      if (it == c2.end()) continue;
      Rational f = it->second;
      c2.erase(it);
      for (const auto& [k, coef] : rest) {
        c2[k] += coef * f;
        if (c2[k].is_zero()) c2.erase(k);
      }
    }
    r.solved.push_back({pivot, rest});
  }
  for (int v = 0; v < d.n(); ++v)
    if (!is_root[v] && !is_pivot[v]) r.free_vars.push_back(v);
  return r;
}

double eval_form(const MomentumForm& f, const std::vector<double>& zeta) {
  double v = 0.0;
  for (const auto& [k, c] : f) v += c.to_double() * zeta[k];
  return v;
}

/*
 * Scale-coherent term selection. Integrating the scale-independent forest
 * sum blindly over the window is not what the multiscale bound controls:
 * subtraction terms whose subgraph is not local for the sampled scales
 * carry uncompensated infrared tails. Per sample we therefore keep exactly
 * the subtractions whose member is a divergent local subgraph of that
 * sample's M-adic attribution, i.e. evaluate sum_mu prod_{local}(1-tau_g)
 * A^mu. Active members are automatically nested or disjoint, so the
 * active forests are all their subsets and the sum telescopes into the
 * product form used in the published region-by-region computations.
 */
struct MemberLocality {
  // member line scales are min/max'ed per sample
  std::vector<int> core_sigma;    // child vertex of each in-core sigma edge
  std::vector<int> core_phi;      // canonical phi vertices
  std::vector<int> boundary;      // zeta symbols of boundary sigma legs
  std::vector<int> root_verts;    // roots of W carrying root legs
  bool is_total = false;          // W covers everything (B-variant excluded)
};

std::vector<MemberLocality> member_localities(const AmplitudeExpression& expr) {
  const HalfDiagram& d = expr.diagram;
  std::vector<MemberLocality> out;
  for (const auto& m : expr.members) {
    MemberLocality ml;
    std::vector<char> in(d.n(), 0);
    for (int v : m.verts) in[v] = 1;
    for (int v : m.verts) {
      int p = d.forest.parent[v];
      if (p >= 0 && in[p]) ml.core_sigma.push_back(v);
      if (p >= 0 && !in[p]) ml.boundary.push_back(v);
      if (p < 0) ml.root_verts.push_back(v);
      for (int c : d.children[v])
        if (!in[c]) ml.boundary.push_back(c);
      if (d.phi_line_vertex(v) == v) ml.core_phi.push_back(v);
    }
    ml.is_total = (int)m.verts.size() == d.n();
    out.push_back(std::move(ml));
  }
  return out;
}

int scale_of(double value, double invlogM) {
  return (int)std::floor(std::log(std::abs(value)) * invlogM);
}

bool member_local(const MemberLocality& ml, const std::vector<int>& sigma_scale,
                  const std::vector<int>& phi_scale, const std::vector<int>& root_scale) {
  int core_min = INT32_MAX;
  for (int v : ml.core_sigma) core_min = std::min(core_min, sigma_scale[v]);
  for (int v : ml.core_phi) core_min = std::min(core_min, phi_scale[v]);
  int boundary_max = INT32_MIN;
  for (int v : ml.boundary) boundary_max = std::max(boundary_max, sigma_scale[v]);
  int root_min = INT32_MAX, root_max = INT32_MIN;
  for (int r : ml.root_verts) {
    root_min = std::min(root_min, root_scale[r]);
    root_max = std::max(root_max, root_scale[r]);
  }
  // node without the root legs
  if (core_min > std::max(boundary_max, ml.root_verts.empty() ? INT32_MIN : root_max))
    return true;
  // node with the root legs inside (never the whole graph)
  if (!ml.root_verts.empty() && !ml.is_total &&
      std::min(core_min, root_min) > boundary_max)
    return true;
  return false;
}

double eval_term(const ForestTerm& t, const std::vector<double>& zeta, double alpha) {
  double v = t.sign;
  for (const auto& f : t.factors) {
    double a = eval_form(f.arg, zeta);
    switch (f.kind) {
      case Factor::AbsHalfMinusAlpha: v *= std::pow(std::abs(a), 0.5 - alpha); break;
      case Factor::AbsOneMinusTwoAlpha: v *= std::pow(std::abs(a), 1.0 - 2.0 * alpha); break;
      case Factor::InvZeta: v /= a; break;
    }
  }
  return v;
}

void check_integrable(const AmplitudeExpression& expr, const QuadratureConfig& cfg) {
  if (!cfg.strict_integrability || expr.terms.size() > 1) return;
  for (const auto& m : divergent_members(expr.diagram)) {
    Subgraph g = m.lines;
    DivergenceDegree om = omega(expr.diagram, g);
    if (!g.is_bilateral(expr.diagram)) om = om + om;
    if (om.at(cfg.alpha) > 1e-12)
      throw NonIntegrable("unsubtracted divergent subgraph (omega = " + om.str() + ")");
  }
}

// shared term evaluation with the per-sample locality selection
struct HalfEvaluator {
  const AmplitudeExpression* expr;
  std::vector<MemberLocality> localities;
  double alpha;
  double invlogM;

  HalfEvaluator(const AmplitudeExpression& e, const QuadratureConfig& cfg)
      : expr(&e),
        localities(member_localities(e)),
        alpha(cfg.alpha),
        invlogM(1.0 / std::log(cfg.M)) {}

  double half(const std::vector<double>& zeta) const {
    const HalfDiagram& d = expr->diagram;
    std::vector<int> sigma_scale(d.n(), INT32_MIN), phi_scale(d.n(), INT32_MIN),
        root_scale(d.n(), INT32_MIN);
    for (int v = 0; v < d.n(); ++v) {
      if (d.forest.parent[v] >= 0)
        sigma_scale[v] = scale_of(zeta[v], invlogM);
      else
        root_scale[v] = scale_of(zeta[v], invlogM);
      if (d.phi_line_vertex(v) == v)
        phi_scale[v] = scale_of(eval_form(d.xi_form(v), zeta), invlogM);
    }
    std::vector<char> active(expr->members.size(), 1);
    for (std::size_t mi = 0; mi < expr->members.size(); ++mi)
      active[mi] = member_local(localities[mi], sigma_scale, phi_scale, root_scale);
    double out = 0.0;
    for (const auto& t : expr->terms) {
      bool keep = true;
      for (int mi : t.members)
        if (!active[mi]) { keep = false; break; }
      if (keep) out += eval_term(t, zeta, alpha);
    }
    return out;
  }
};

}  // namespace

AmplitudeEstimate evaluate_amplitude_routed(
    const AmplitudeExpression& expr, int dims,
    const std::function<void(const double*, std::vector<double>&)>& fill_zeta,
    const QuadratureConfig& cfg) {
  check_integrable(expr, cfg);
  HalfEvaluator he(expr, cfg);
  auto integrand = [&](const double* z) {
    std::vector<double> zeta(expr.diagram.n(), 0.0);
    fill_zeta(z, zeta);
    double half = he.half(zeta);
    return half * half;
  };
  if (dims == 0) {
    AmplitudeEstimate est;
    est.value = integrand(nullptr);
    est.n_samples = 1;
    return est;
  }
  McEstimate mc = stratified_mc(cfg, dims, integrand);
  return {mc.value, mc.std_error, mc.n_samples};
}

AmplitudeEstimate evaluate_amplitude(const AmplitudeExpression& expr,
                                     const std::vector<double>& root_zeta,
                                     const QuadratureConfig& cfg) {
  const HalfDiagram& d = expr.diagram;
  if (root_zeta.size() != d.roots.size())
    throw std::invalid_argument("one external momentum per root expected");

  SymmetricDiagram sym{d};
  if (sym.totally_contracted()) {
    // zeta_ext is forced to zero; connected diagrams vanish by symmetry
    AmplitudeEstimate est;
    est.n_samples = 0;
    est.value = 0.0;
    if (!sym.zero_by_symmetry())
      throw NonIntegrable("totally contracted diagram without the parity zero");
    return est;
  }

  Routing routing = make_routing(d);
  std::vector<double> zeta_base(d.n(), 0.0);
  for (std::size_t i = 0; i < d.roots.size(); ++i) zeta_base[d.roots[i]] = root_zeta[i];
  auto fill = [&](const double* z, std::vector<double>& zeta) {
    zeta = zeta_base;
    for (int i = 0; i < routing.dims(); ++i) zeta[routing.free_vars[i]] = z[i];
    for (const auto& [pivot, form] : routing.solved) zeta[pivot] = eval_form(form, zeta);
  };
  return evaluate_amplitude_routed(expr, routing.dims(), fill, cfg);
}

std::vector<AmplitudeEstimate> amplitude_window_scan(const AmplitudeExpression& expr,
                                                     const std::vector<double>& root_zeta,
                                                     QuadratureConfig cfg,
                                                     const std::vector<int>& jmax_list) {
  // One sample population over the largest window; each window estimate
  // masks the samples above its top scale, so the estimates share
  // randomness and increase monotonically (the integrand is a square).
  if (jmax_list.empty()) return {};
  std::vector<int> sorted = jmax_list;
  std::sort(sorted.begin(), sorted.end());
  QuadratureConfig big = cfg;
  big.j_max = sorted.back();

  const HalfDiagram& d = expr.diagram;
  check_integrable(expr, big);
  Routing routing = make_routing(d);
  if (routing.dims() == 0) {
    auto e = evaluate_amplitude(expr, root_zeta, cfg);
    return std::vector<AmplitudeEstimate>(jmax_list.size(), e);
  }
  std::vector<double> zeta_base(d.n(), 0.0);
  for (std::size_t i = 0; i < d.roots.size(); ++i) zeta_base[d.roots[i]] = root_zeta[i];
  HalfEvaluator he(expr, cfg);

  std::vector<AmplitudeEstimate> out(jmax_list.size());
  for (std::size_t wi = 0; wi < jmax_list.size(); ++wi) {
    const double cap = std::pow(cfg.M, jmax_list[wi] + 1);
    auto integrand = [&](const double* z) {
      for (int i = 0; i < routing.dims(); ++i)
        if (std::abs(z[i]) >= cap) return 0.0;
      std::vector<double> zeta = zeta_base;
      for (int i = 0; i < routing.dims(); ++i) zeta[routing.free_vars[i]] = z[i];
      for (const auto& [pivot, form] : routing.solved) zeta[pivot] = eval_form(form, zeta);
      double half = he.half(zeta);
      return half * half;
    };
    McEstimate mc = stratified_mc(big, routing.dims(), integrand);
    out[wi] = {mc.value, mc.std_error, mc.n_samples};
  }
  return out;
}

AmplitudeExpression filter_useful(const AmplitudeExpression& expr,
                                  const ScaleAttribution& mu) {
  auto strip_root_legs = [](const Subgraph& g) {
    Subgraph core;
    for (const auto& l : g.lines)
      if (l.kind != LineId::RootLeg) core.lines.insert(l);
    return core;
  };
  SymmetricDiagram sym{expr.diagram};
  std::vector<Subgraph> local_cores;
  for (const auto& node : gn_tree(sym, mu))
    if (is_divergent(expr.diagram, node.g)) local_cores.push_back(strip_root_legs(node.g));

  AmplitudeExpression out = expr;
  out.terms.clear();
  for (const auto& t : expr.terms) {
    bool keep = true;
    for (int mi : t.members) {
      Subgraph core = strip_root_legs(expr.members[mi].lines);
      if (std::find(local_cores.begin(), local_cores.end(), core) == local_cores.end())
        keep = false;
    }
    if (keep) out.terms.push_back(t);
  }
  return out;
}

namespace {

// fBm half-kernel of a labeled tree piece at continuous frequencies xi:
//   (2 pi c_a)^{-m/2} e^{i theta zeta_root} prod_v 1/(i zeta_v) W(xi)
// where W runs the |xi|^{1/2-a} leg weights through the forest formula.
// The forest terms are precomputed per tree shape (read-only afterwards,
// so sampling threads can share the kernel).
struct FbmKernel {
  double alpha = 0.2;
  double norm1 = 1.0;  // (2 pi c_a)^{-1/2}
  RenormMode mode = RenormMode::bphz;

  struct WeightTerm {
    double sign;
    std::vector<std::vector<std::pair<int, double>>> abs_args;  // zeta index, coeff
  };
  std::map<std::vector<int>, std::vector<WeightTerm>> shapes;

  void warm(const LabeledForest& piece) {
    const int m = piece.size();
    if (m == 1 || mode == RenormMode::none || shapes.count(piece.par)) return;
    HalfDiagram d = build_half_diagram(HeapForest{piece.par}, {});
    std::vector<WeightTerm> terms;
    for (const auto& t : bphz_renormalize(d).terms) {
      WeightTerm wt;
      wt.sign = t.sign;
      for (const auto& f : t.factors)
        if (f.kind == Factor::AbsHalfMinusAlpha) {
          std::vector<std::pair<int, double>> arg;
          for (const auto& [k, c] : f.arg) arg.push_back({k, c.to_double()});
          wt.abs_args.push_back(std::move(arg));
        }
      terms.push_back(std::move(wt));
    }
    shapes.emplace(piece.par, std::move(terms));
  }

  cplx piece_value(const LabeledForest& piece, const std::vector<double>& xi,
                   double theta) const {
    const int m = piece.size();
    std::vector<double> zeta(m, 0.0);
    double total = 0.0;
    for (int v = 0; v < m; ++v) {
      total += xi[v];
      for (int p = v; p >= 0; p = piece.par[p]) zeta[p] += xi[v];
    }
    double weights = 0.0;
    if (m == 1 || mode == RenormMode::none) {
      weights = 1.0;
      for (int v = 0; v < m; ++v) weights *= std::pow(std::abs(xi[v]), 0.5 - alpha);
    } else {
      for (const auto& wt : shapes.at(piece.par)) {
        double v = wt.sign;
        for (const auto& arg : wt.abs_args) {
          double a = 0.0;
          for (const auto& [k, c] : arg) a += c * zeta[k];
          v *= std::pow(std::abs(a), 0.5 - alpha);
        }
        weights += v;
      }
    }
    cplx val = std::exp(cplx(0.0, theta * total)) * weights *
               std::pow(norm1, (double)m);
    for (int v = 0; v < m; ++v) val /= cplx(0.0, zeta[v]);
    return val;
  }

  cplx forest_value(const LabeledForest& forest, const std::vector<double>& xi_by_label,
                    double theta) const {
    cplx out(1.0, 0.0);
    for (const auto& comp : components(forest)) {
      std::vector<double> xi(comp.size());
      for (int i = 0; i < comp.size(); ++i) xi[i] = xi_by_label[comp.verts[i]];
      out *= piece_value(comp, xi, theta);
    }
    return out;
  }
};

// J^{ts} kernel on the n-th chaos at continuous frequencies (slot i of
// `xi` pairs with letter word[i]); mirrors rough_path_jphi with atoms
// replaced by points.
struct JKernel {
  int n;
  FbmKernel kernel;
  // per sector: the permutation, and per permutation-graph forest the
  // coefficient and tree-convolution term lists
  struct ForestPart {
    double coef;
    std::vector<std::vector<ConvTerm>> per_tree;
  };
  struct SectorPart {
    std::vector<int> sigma;
    std::vector<ForestPart> forests;
  };
  std::vector<SectorPart> sectors;

  JKernel(int n_, double alpha, RenormMode mode) : n(n_) {
    kernel.alpha = alpha;
    kernel.norm1 = 1.0 / std::sqrt(fbm_two_pi_c_alpha(alpha));
    kernel.mode = mode;
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    do {
      SectorPart sp;
      sp.sigma = sigma;
      for (const auto& [forest, coef] : permutation_graph(n, sigma)) {
        ForestPart fp;
        fp.coef = coef.to_double();
        for (const auto& tree : components(as_labeled(forest))) {
          auto terms = tree_convolution_terms(tree);
          for (const auto& ct : terms) {
            for (const auto& comp : components(ct.roo)) kernel.warm(comp);
            for (const auto& comp : components(ct.lea_antipode)) kernel.warm(comp);
          }
          fp.per_tree.push_back(std::move(terms));
        }
        sp.forests.push_back(std::move(fp));
      }
      sectors.push_back(std::move(sp));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  cplx operator()(const std::vector<double>& xi, double s, double t) const {
    // find the sector: |xi_{sigma(1)}| <= ...
    cplx out(0.0, 0.0);
    for (const auto& sp : sectors) {
      bool inside = true;
      for (int i = 0; i + 1 < n && inside; ++i)
        inside = std::abs(xi[sp.sigma[i]]) <= std::abs(xi[sp.sigma[i + 1]]);
      if (!inside) continue;
      std::vector<double> slot(n);
      for (int j = 0; j < n; ++j) slot[j] = xi[sp.sigma[j]];
      for (const auto& fp : sp.forests) {
        cplx prod(1.0, 0.0);
        for (const auto& terms : fp.per_tree) {
          cplx conv(0.0, 0.0);
          for (const auto& ct : terms)
            conv += ct.coef * kernel.forest_value(ct.roo, slot, t) *
                    kernel.forest_value(ct.lea_antipode, slot, s);
          prod *= conv;
        }
        out += fp.coef * prod;
      }
      break;
    }
    return out;
  }
};

}  // namespace

AmplitudeEstimate variance_J(const Word& word, double s, double t,
                             const QuadratureConfig& cfg, RenormMode mode) {
  cfg.validate();
  const int n = (int)word.size();
  if (n < 1 || n > 2)
    throw std::invalid_argument("variance_J implemented for |word| in {1,2}");
  if (s == t) return {0.0, 0.0, 0};

  const double a = cfg.alpha;
  const double norm2 = 1.0 / fbm_two_pi_c_alpha(a);

  if (n == 1) {
    auto integrand = [&](const double* z) {
      double zeta = z[0];
      double osc = std::abs(std::exp(cplx(0.0, t * zeta)) - std::exp(cplx(0.0, s * zeta)));
      return norm2 * osc * osc * std::pow(std::abs(zeta), -1.0 - 2.0 * a);
    };
    McEstimate mc = stratified_mc(cfg, 1, integrand);
    return {mc.value, mc.std_error, mc.n_samples};
  }

  if (mode == RenormMode::none && cfg.strict_integrability && a < 0.25)
    throw NonIntegrable("level-2 kernel needs subtraction for alpha < 1/4");

  JKernel K(2, a, mode);
  const bool equal_letters = word[0] == word[1];
  auto integrand = [&](const double* z) {
    std::vector<double> xi{z[0], z[1]};
    cplx k = K(xi, s, t);
    double val = std::norm(k);
    if (equal_letters) {
      cplx kswap = K({z[1], z[0]}, s, t);
      val += std::real(k * std::conj(kswap));
    }
    return val;
  };
  McEstimate mc = stratified_mc(cfg, 2, integrand);
  return {mc.value, mc.std_error, mc.n_samples};
}

ScanResult fit_scaling(const std::vector<ScanPoint>& pts, double rel_err_cap) {
  ScanResult out;
  out.points = pts;
  std::vector<double> xs, ys, ws;
  bool weighted = true;
  for (const auto& p : pts) {
    if (!(p.y.value > 0.0)) continue;
    double rel = p.y.std_error / p.y.value;
    if (rel > rel_err_cap) continue;
    xs.push_back(std::log(p.x));
    ys.push_back(std::log(p.y.value));
    if (rel <= 0.0) weighted = false;
    ws.push_back(rel > 0.0 ? 1.0 / (rel * rel) : 1.0);
  }
  const int m = (int)xs.size();
  if (m < 4) throw InsufficientData("need at least 4 admissible points");
  if (!weighted) std::fill(ws.begin(), ws.end(), 1.0);

  double W = 0, Sx = 0, Sy = 0;
  for (int i = 0; i < m; ++i) {
    W += ws[i];
    Sx += ws[i] * xs[i];
    Sy += ws[i] * ys[i];
  }
  double xbar = Sx / W, ybar = Sy / W;
  double Sxx = 0, Sxy = 0;
  for (int i = 0; i < m; ++i) {
    Sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
    Sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
  }
  out.slope = Sxy / Sxx;
  out.intercept = ybar - out.slope * xbar;
  out.n_used = m;
  if (weighted) {
    out.slope_err = std::sqrt(1.0 / Sxx);
  } else {
    double rss = 0;
    for (int i = 0; i < m; ++i) {
      double r = ys[i] - (out.intercept + out.slope * xs[i]);
      rss += r * r;
    }
    out.slope_err = m > 2 ? std::sqrt(rss / (m - 2) / Sxx) : 0.0;
  }
  return out;
}

}  // namespace rrp
