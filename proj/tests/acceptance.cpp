// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle_quadrature.hpp"
#include "rrp/evaluate.hpp"
#include "rrp/fbm.hpp"
#include "rrp/hopf.hpp"
#include "rrp/iterated.hpp"
#include "rrp/rough_path.hpp"
#include "rrp/selfcheck.hpp"

using namespace rrp;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  criterion-%-2d  %-34s %s\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const PathModel& fixture_path() {
  static PathModel p = PathModel::generic(2, 2, 7);
  return p;
}

// ---------------------------------------------------------------- 1
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto checks = quick_checks();
  bool pass = true;
  std::string detail;
  for (const auto& c : checks)
    if (c.name.rfind("hopf", 0) == 0 || c.name.rfind("shuffle", 0) == 0 ||
        c.name.rfind("theta", 0) == 0) {
      pass = pass && c.pass;
      if (!c.pass) detail += c.name + " failed; ";
    }
  double dt = seconds_since(t0);
  pass = pass && dt < 60.0;
  report(1, "exact-hopf-suite", pass, detail + "runtime " + std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- 2
void criterion2() {
  auto cherry = DecoratedTree::node(1, {DecoratedTree::leaf(2), DecoratedTree::leaf(3)});
  TensorHH expect;
  Forest T{cherry}, empty{};
  expect.add({T, empty}, 1);
  expect.add({empty, T}, 1);
  expect.add({Forest{DecoratedTree::node(1, {DecoratedTree::leaf(2)})},
              Forest{DecoratedTree::leaf(3)}}, 1);
  expect.add({Forest{DecoratedTree::node(1, {DecoratedTree::leaf(3)})},
              Forest{DecoratedTree::leaf(2)}}, 1);
  expect.add({Forest{DecoratedTree::leaf(1)},
              make_forest({DecoratedTree::leaf(2), DecoratedTree::leaf(3)})}, 1);
  bool cop = coproduct(cherry) == expect;

  LinearComb<Word> th;
  th.add(Word{1, 2, 3}, 1);
  th.add(Word{1, 3, 2}, 1);
  bool thok = theta(cherry) == th;
  report(2, "displayed-coproduct-theta", cop && thok,
         cop ? (thok ? "5 tensor terms, 2 trunk words" : "theta mismatch")
             : "coproduct mismatch");
}

// ---------------------------------------------------------------- 3
void criterion3() {
  const auto& p = fixture_path();
  const double s = 0.15, t = 0.85;
  double worst = 0.0;
  const std::vector<Word> words{{1}, {1, 2}, {1, 2, 1}, {1, 2, 2, 1}};
  for (const auto& w : words) {
    const int n = (int)w.size();
    cplx oracle_val = oracle::nested_iterated(p, w, s, t, n <= 3 ? 24 : 20);
    cplx sum(0.0, 0.0);
    for (const auto& [sigma, sec] : split_measure(p, w)) {
      auto pg = permutation_graph(n, sigma);
      for (const auto& atom : sec.atoms)
        for (const auto& [forest, coef] : pg)
          sum += coef.to_double() * atom.weight *
                 iterated_integral_atom(p, forest, atom.freq, s, t);
    }
    worst = std::max(worst, std::abs(sum - oracle_val));
  }

  // the published two-term permutation graph for sigma = (1,2,3)->(2,3,1)
  auto pg = permutation_graph(3, {1, 2, 0});
  LinearComb<HeapForest> expect;
  expect.add(HeapForest{{-1, 0, -1}}, 1);
  expect.add(HeapForest{{-1, 0, 0}}, -1);
  bool structural = pg == expect;

  char buf[96];
  std::snprintf(buf, sizeof buf, "max residual %.2e, published T^sigma %s", worst,
                structural ? "matched" : "MISSED");
  report(3, "permutation-graph-oracle", worst < 1e-8 && structural, buf);
}

// ---------------------------------------------------------------- 4
void criterion4() {
  const auto& p = fixture_path();
  SkeletonData sk(p);
  MockData mock(p, 0x5eed);

  std::vector<Word> words;
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : enumerate_words(n, 2)) words.push_back(w);
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& u : words)
    for (const auto& v : words)
      if (u.size() + v.size() <= 4) pairs.push_back({u, v});

  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    double a = counter_uniform(99, 1, trial), b = counter_uniform(99, 2, trial),
           c = counter_uniform(99, 3, trial);
    double lo = 0.1 + 0.2 * a, mid = lo + 0.1 + 0.3 * b, hi = mid + 0.1 + 0.3 * c;
    for (const TreeData* data : {(const TreeData*)&sk, (const TreeData*)&mock}) {
      worst = std::max(worst, verify_chen(*data, words, lo, mid, hi));
      if (trial % 10 == 0)
        worst = std::max(worst, verify_shuffle(*data, pairs, lo, hi));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.2e over 50 triples", worst);
  report(4, "formal-rough-path", worst < 1e-10, buf);
}

// ---------------------------------------------------------------- 5
void criterion5() {
  SymmetricDiagram g{fixtures::example_half()};
  auto s1 = omega_star_sequence(g, fixtures::attribution_ex1());
  auto s2 = omega_star_sequence(g, fixtures::attribution_ex2());
  auto eq = [](const OmegaStarEntry& e, long long a, long long b) {
    return e.value == DivergenceDegree{Rational(a), Rational(b)};
  };
  bool ok1 = s1.size() == 4 && eq(s1[0], -1, -4) && eq(s1[1], -4, -8) &&
             eq(s1[2], -1, -8) && eq(s1[3], 1, -8);
  bool ok2 = s2.size() == 4 && eq(s2[0], -1, -2) && eq(s2[1], -2, -6) &&
             eq(s2[2], -2, -8) && eq(s2[3], 1, -8);
  std::string got;
  for (const auto& e : s1) got += "(" + e.value.str() + ") ";
  for (const auto& e : s2) got += "(" + e.value.str() + ") ";
  report(5, "omega-star-symbolic-match", ok1 && ok2, got);
}

// ---------------------------------------------------------------- 6
HalfDiagram random_tree_diagram(unsigned long long& state, int n) {
  auto rnd = [&](int m) {
    state = state * 2862933555777941757ULL + 3037000493ULL;
    return (int)((state >> 33) % m);
  };
  HeapForest f;
  f.parent.resize(n);
  for (int v = 0; v < n; ++v) f.parent[v] = v == 0 ? -1 : rnd(v);
  return build_half_diagram(f, {});
}

ScaleAttribution random_attribution(const HalfDiagram& d, unsigned long long& state) {
  auto rnd = [&](int m) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (int)((state >> 33) % m);
  };
  ScaleAttribution mu;
  for (const auto& l : d.all_lines()) mu.j[l] = rnd(6);
  return mu;
}

bool same_set(std::vector<Subgraph> a, std::vector<Subgraph> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void criterion6() {
  bool pass = true;
  std::string detail;

  // worked diagrams: Ext(empty) = GN nodes, exhaustive interval on a safe F
  for (int which : {1, 2}) {
    SymmetricDiagram g{fixtures::example_half()};
    const auto& d = g.half;
    auto mu = which == 1 ? fixtures::attribution_ex1() : fixtures::attribution_ex2();
    auto cls = classify_forest(d, {}, mu);
    std::vector<Subgraph> nodes;
    for (const auto& n : gn_tree(g, mu)) nodes.push_back(n.g);
    if (!same_set(cls.extension, nodes)) {
      pass = false;
      detail += "Ext(empty)!=GN; ";
    }
    auto F = nd_projection(d, {nodes[0]}, mu);
    auto cf = classify_forest(d, F, mu);
    const auto& ext = cf.extension;
    if (ext.size() <= 14) {
      for (unsigned long mask = 0; mask < (1UL << ext.size()); ++mask) {
        std::vector<Subgraph> Fp = F;
        for (std::size_t i = 0; i < ext.size(); ++i)
          if (mask >> i & 1) Fp.push_back(ext[i]);
        if (!same_set(nd_projection(d, Fp, mu), F)) {
          pass = false;
          detail += "interval forward fails; ";
          break;
        }
      }
    }
  }

  // random diagrams: ND idempotent and every extension member turns
  // dangerous when added (Prop ii)
  unsigned long long state = 20260810;
  for (int trial = 0; trial < 20; ++trial) {
    auto d = random_tree_diagram(state, 4 + (trial % 5));
    auto mu = random_attribution(d, state);
    SymmetricDiagram g{d};
    auto subs = connected_subgraphs(d);
    std::vector<Subgraph> forest;
    for (int pick = 0; pick < 5; ++pick) {
      const auto& cand = subs[(state >>= 5, state * 48271 % subs.size())];
      bool ok = true;
      for (const auto& h : forest)
        if (!(h.contains(cand) || cand.contains(h) || h.disjoint(cand)) || h == cand)
          ok = false;
      if (ok) forest.push_back(cand);
    }
    auto nd1 = nd_projection(d, forest, mu);
    if (!same_set(nd_projection(d, nd1, mu), nd1)) {
      pass = false;
      detail += "ND idempotence fails; ";
    }
    auto cls = classify_forest(d, nd1, mu);
    for (const auto& s : cls.extension) {
      std::vector<Subgraph> Fp = nd1;
      Fp.push_back(s);
      auto c2 = classify_forest(d, Fp, mu);
      bool dangerous = false;
      for (const auto& ds : c2.dangerous) dangerous = dangerous || ds == s;
      if (!dangerous) {
        pass = false;
        detail += "Ext member not dangerous; ";
      }
      if (!same_set(nd_projection(d, Fp, mu), nd1)) {
        pass = false;
        detail += "interval point escapes; ";
      }
    }
  }
  report(6, "forest-machinery", pass, pass ? "two worked + 20 random diagrams" : detail);
}

// ---------------------------------------------------------------- 7
void criterion7() {
  auto expr = bphz_renormalize(fixtures::example_half());
  QuadratureConfig cfg;
  cfg.alpha = 0.2;
  cfg.j_min = -16;
  cfg.j_max = 12;
  cfg.mc_samples = 400000;
  cfg.threads = 4;
  cfg.rng_seed = 42;

  for (int which : {1, 2}) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ScanPoint> pts;
    for (int k = 2; k <= 7; ++k) {
      double z1 = std::pow(2.0, -k);
      AmplitudeEstimate est;
      if (which == 1) {
        est = evaluate_amplitude(expr, {z1}, cfg);
      } else {
        // example-2 routing: (xi1, zeta2, zeta3) free
        auto fill = [z1](const double* z, std::vector<double>& zeta) {
          zeta[0] = z1;
          zeta[1] = z[1];
          zeta[2] = z[2];
          zeta[3] = z1 - z[1] - z[0];
        };
        est = evaluate_amplitude_routed(expr, 3, fill, cfg);
      }
      pts.push_back({z1, est});
    }
    auto fit = fit_scaling(pts);
    double dt = seconds_since(t0);
    bool pass = std::abs(fit.slope - (-0.6)) < 0.1 && dt < 600.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "slope %.3f +- %.3f (target -0.6), %.1f s", fit.slope,
                  fit.slope_err, dt);
    report(7, which == 1 ? "scaling-example-1" : "scaling-example-2", pass, buf);
  }
}

// ---------------------------------------------------------------- 8
void criterion8() {
  QuadratureConfig cfg;
  cfg.alpha = 0.2;
  cfg.j_min = -12;
  cfg.mc_samples = 300000;
  cfg.threads = 4;
  cfg.strict_integrability = false;
  std::vector<int> jmaxes{2, 4, 6, 8, 10, 12};

  auto d = fixtures::example_half();
  auto unren = amplitude_window_scan(amplitude(d), {0.0625}, cfg, jmaxes);
  auto ren = amplitude_window_scan(bphz_renormalize(d), {0.0625}, cfg, jmaxes);

  bool growing = true;
  for (std::size_t i = 1; i < unren.size(); ++i)
    growing = growing && unren[i].value > unren[i - 1].value * 1.05;
  double last_rel =
      (ren.back().value - ren[ren.size() - 2].value) / ren.back().value;
  bool stabilized = std::abs(last_rel) < 0.02;
  char buf[96];
  std::snprintf(buf, sizeof buf, "unren x%.1f over window, ren last change %.4f",
                unren.back().value / unren.front().value, last_rel);
  report(8, "renormalization-witness", growing && stabilized, buf);
}

// ---------------------------------------------------------------- 9
void criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  QuadratureConfig cfg;
  cfg.alpha = 0.2;
  cfg.j_min = -24;
  cfg.j_max = 36;
  cfg.mc_samples = 500000;
  cfg.threads = 4;
  cfg.rng_seed = 3;

  std::vector<ScanPoint> p1;
  for (int k = 2; k <= 7; ++k) {
    double ts = std::pow(2.0, -k);
    p1.push_back({ts, variance_J(Word{1}, 0.2, 0.2 + ts, cfg)});
  }
  auto f1 = fit_scaling(p1);

  cfg.j_min = -20;
  cfg.j_max = 24;
  cfg.mc_samples = 400000;
  std::vector<ScanPoint> p2;
  bool positive = true, deterministic = true;
  for (int k = 2; k <= 7; ++k) {
    double ts = std::pow(2.0, -k);
    auto e = variance_J(Word{1, 2}, 0.2, 0.2 + ts, cfg);
    positive = positive && e.value > 0.0;
    p2.push_back({ts, e});
  }
  auto again = variance_J(Word{1, 2}, 0.2, 0.2 + 0.25, cfg);
  deterministic = again.value == p2.front().y.value;
  auto f2 = fit_scaling(p2);
  double dt = seconds_since(t0);

  bool pass1 = std::abs(f1.slope - 0.4) < 0.05;
  bool pass2 = std::abs(f2.slope - 0.8) < 0.1;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "n=1 slope %.3f (0.4 +- 0.05), n=2 slope %.3f (0.8 +- 0.1), %s%s%.0f s",
                f1.slope, f2.slope, positive ? "positive, " : "NOT POSITIVE, ",
                deterministic ? "deterministic, " : "NOT DETERMINISTIC, ", dt);
  report(9, "holder-variance-slopes", pass1 && pass2 && positive && deterministic &&
             dt < 900.0, buf);
}

// ---------------------------------------------------------------- 10
void criterion10() {
  bool pass = true;
  double worst_z = 0.0;
  for (double a : {0.2, 0.7}) {
    QuadratureConfig cfg;
    cfg.alpha = a;
    cfg.j_min = -26;
    cfg.j_max = 36;
    cfg.points_per_scale = 48;
    cfg.rng_seed = 2027;
    FbmSampler fbm(1, cfg);
    std::vector<double> times{0.2, 0.4, 0.6, 0.8, 1.0};
    const int N = 6000;
    std::vector<std::vector<double>> sums(25, std::vector<double>(2, 0.0));
    for (int k = 0; k < N; ++k) {
      auto p = fbm.sample(times, k);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          double v = p[0][i] * p[0][j];
          sums[i * 5 + j][0] += v;
          sums[i * 5 + j][1] += v * v;
        }
    }
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        double mean = sums[i * 5 + j][0] / N;
        double var = sums[i * 5 + j][1] / N - mean * mean;
        double se = std::sqrt(var / N);
        double expect = 0.5 * (std::pow(times[i], 2 * a) + std::pow(times[j], 2 * a) -
                               std::pow(std::abs(times[i] - times[j]), 2 * a));
        double z = (mean - expect) / se;
        worst_z = std::max(worst_z, std::abs(z));
        pass = pass && std::abs(z) < 3.0;
      }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |z| = %.2f over 2 x 25 grid points", worst_z);
  report(10, "fbm-covariance", pass, buf);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d criteria failed, total %.1f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
