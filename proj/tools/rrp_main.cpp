// rrp: renormalized rough paths over fractional Brownian motion.
// Subcommands expose the Hopf combinatorics, Fourier normal ordering,
// tree Feynman diagrams with BPHZ subtraction, the multiscale machinery,
// and the numeric scaling scans.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rrp/dot_export.hpp"
#include "rrp/fbm.hpp"
#include "rrp/hopf.hpp"
#include "rrp/errors.hpp"
#include "rrp/forests.hpp"
#include "rrp/json_io.hpp"
#include "rrp/selfcheck.hpp"

namespace fs = std::filesystem;
using namespace rrp;

namespace {

constexpr const char* kVersion = "rrp 0.1.0";

struct Output {
  std::string dir = ".";
  std::string format = "json";

  fs::path resolve(const std::string& name) const {
    fs::create_directories(dir);
    return fs::path(dir) / name;
  }
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// every run records the fully resolved configuration
void write_manifest(const Output& out, const std::string& subcommand,
                    const QuadratureConfig& cfg, const json& extra) {
  json m;
  m["tool"] = kVersion;
  m["subcommand"] = subcommand;
  m["config"] = config_to_json(cfg);
  m["extra"] = extra;
  write_text(out.resolve("manifest.json"), m.dump(2) + "\n");
}

HalfDiagram builtin_diagram(const std::string& name) {
  if (name == "example1" || name == "example2")
    return build_half_diagram(HeapForest{{-1, 0, 1, 0}}, {});
  if (name == "contracted")
    return build_half_diagram(HeapForest{{-1, 0, 1, 0, -1, 4}}, {{0, 4}, {1, 3}});
  throw std::invalid_argument("unknown builtin diagram " + name);
}

ScaleAttribution builtin_attribution(const std::string& name) {
  ScaleAttribution mu;
  if (name == "ex1") {
    mu.j = {{{LineId::RootLeg, 0}, 0},  {{LineId::SigmaEdge, 1}, 1},
            {{LineId::SigmaEdge, 2}, 3}, {{LineId::SigmaEdge, 3}, 2},
            {{LineId::PhiLeg, 0}, 2},    {{LineId::PhiLeg, 1}, 3},
            {{LineId::PhiLeg, 2}, 3},    {{LineId::PhiLeg, 3}, 2}};
    return mu;
  }
  if (name == "ex2") {
    mu.j = {{{LineId::RootLeg, 0}, 3},  {{LineId::SigmaEdge, 1}, 0},
            {{LineId::SigmaEdge, 2}, 2}, {{LineId::SigmaEdge, 3}, 3},
            {{LineId::PhiLeg, 0}, 1},    {{LineId::PhiLeg, 1}, 2},
            {{LineId::PhiLeg, 2}, 2},    {{LineId::PhiLeg, 3}, 3}};
    return mu;
  }
  throw std::invalid_argument("unknown builtin attribution " + name);
}

void write_csv(const fs::path& path, const ScanResult& scan,
               const std::vector<std::string>& extra_header = {},
               const std::vector<std::vector<double>>& extra_cols = {}) {
  std::ofstream out(path);
  out << "abscissa,estimate,stderr";
  for (const auto& h : extra_header) out << "," << h;
  out << "\n";
  out.precision(12);
  for (std::size_t i = 0; i < scan.points.size(); ++i) {
    out << scan.points[i].x << "," << scan.points[i].y.value << ","
        << scan.points[i].y.std_error;
    for (const auto& col : extra_cols) out << "," << col[i];
    out << "\n";
  }
}

// the example-2 region uses (xi1, zeta2, zeta3) as integration variables;
// evaluating the same renormalized amplitude in that routing is a second,
// independent estimator of the example-1 scan
AmplitudeEstimate evaluate_example2_routing(const AmplitudeExpression& expr, double zeta1,
                                            const QuadratureConfig& cfg);

int run_scan(const std::string& target, QuadratureConfig cfg, const Output& out) {
  json summary;
  summary["target"] = target;
  ScanResult scan;

  if (target == "example1" || target == "example2") {
    auto expr = bphz_renormalize(builtin_diagram("example1"));
    std::vector<ScanPoint> pts;
    for (int k = 2; k <= 7; ++k) {
      double z1 = std::pow(2.0, -k);
      AmplitudeEstimate est = (target == "example1")
                                  ? evaluate_amplitude(expr, {z1}, cfg)
                                  : evaluate_example2_routing(expr, z1, cfg);
      pts.push_back({z1, est});
      std::cerr << "zeta1=2^-" << k << " A=" << est.value << " +- " << est.std_error
                << "\n";
    }
    scan = fit_scaling(pts);
    summary["target_slope"] = 1.0 - 8.0 * cfg.alpha;
  } else if (target == "holder-n1" || target == "holder-n2") {
    Word w = target == "holder-n1" ? Word{1} : Word{1, 2};
    std::vector<ScanPoint> pts;
    for (int k = 2; k <= 7; ++k) {
      double ts = std::pow(2.0, -k);
      auto est = variance_J(w, 0.2, 0.2 + ts, cfg);
      pts.push_back({ts, est});
      std::cerr << "dt=2^-" << k << " Var=" << est.value << " +- " << est.std_error
                << "\n";
    }
    scan = fit_scaling(pts);
    summary["target_slope"] = 2.0 * w.size() * cfg.alpha;
  } else if (target == "fbm-cov") {
    FbmSampler fbm(1, cfg);
    std::vector<double> times{0.2, 0.4, 0.6, 0.8, 1.0};
    const long long paths = std::max(1LL, cfg.mc_samples / 100);
    std::vector<std::vector<double>> prods(25);
    for (long long k = 0; k < paths; ++k) {
      auto p = fbm.sample(times, k);
      for (int i = 0; i < 5; ++i)
        for (int j2 = 0; j2 < 5; ++j2)
          prods[i * 5 + j2].push_back(p[0][i] * p[0][j2]);
    }
    std::vector<double> col_s, col_t, col_expect, col_z;
    scan.points.clear();
    for (int i = 0; i < 5; ++i)
      for (int j2 = 0; j2 < 5; ++j2) {
        double mean = 0, var = 0;
        for (double v : prods[i * 5 + j2]) mean += v;
        mean /= paths;
        for (double v : prods[i * 5 + j2]) var += (v - mean) * (v - mean);
        double se = std::sqrt(var / (paths - 1) / paths);
        double a = cfg.alpha;
        double expect = 0.5 * (std::pow(times[i], 2 * a) + std::pow(times[j2], 2 * a) -
                               std::pow(std::abs(times[i] - times[j2]), 2 * a));
        scan.points.push_back({(double)(i * 5 + j2), {mean, se, paths}});
        col_s.push_back(times[i]);
        col_t.push_back(times[j2]);
        col_expect.push_back(expect);
        col_z.push_back(se > 0 ? (mean - expect) / se : 0.0);
      }
    write_csv(out.resolve(target + ".csv"), scan, {"s", "t", "expected", "zscore"},
              {col_s, col_t, col_expect, col_z});
    double worst = 0;
    for (double z : col_z) worst = std::max(worst, std::abs(z));
    summary["max_abs_zscore"] = worst;
    summary["paths"] = paths;
    write_text(out.resolve(target + "_summary.json"), summary.dump(2) + "\n");
    write_manifest(out, "scan", cfg, summary);
    std::cout << summary.dump(2) << std::endl;
    return 0;
  } else {
    throw std::invalid_argument("unknown scan target " + target);
  }

  write_csv(out.resolve(target + ".csv"), scan);
  summary["fit"] = scan_to_json(scan);
  write_text(out.resolve(target + "_summary.json"), summary.dump(2) + "\n");
  write_manifest(out, "scan", cfg, summary);
  std::cout << summary.dump(2) << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"renormalized rough paths over fractional Brownian motion"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Output out;
  if (const char* env = std::getenv("RRP_OUT_DIR")) out.dir = env;
  app.add_option("--out-dir", out.dir, "output directory (env RRP_OUT_DIR)");

  QuadratureConfig cfg;
  std::string config_file;
  app.add_option("--config", config_file, "JSON config file (flags take precedence)");
  auto* opt_alpha = app.add_option("--alpha", cfg.alpha, "Hurst-type exponent");
  auto* opt_seed = app.add_option("--seed", cfg.rng_seed, "RNG seed");
  auto* opt_samples = app.add_option("--samples", cfg.mc_samples, "MC samples");
  auto* opt_threads = app.add_option("--threads", cfg.threads, "worker threads");
  std::string window;
  auto* opt_window = app.add_option("--window", window, "scale window j_min:j_max");

  // hopf ------------------------------------------------------------------
  auto* hopf_cmd = app.add_subcommand("hopf", "Hopf algebra of decorated trees and words");
  hopf_cmd->fallthrough();
  std::string hopf_op = "coproduct", tree_file, word_str, word2_str;
  hopf_cmd->add_option("op", hopf_op,
                       "coproduct|antipode|theta|shuffle|word-coproduct|word-antipode");
  hopf_cmd->add_option("--tree", tree_file, "tree JSON file");
  hopf_cmd->add_option("--word", word_str, "word as digits, e.g. 12");
  hopf_cmd->add_option("--word2", word2_str, "second word (shuffle)");
  std::string hopf_format = "json";
  hopf_cmd->add_option("--format", hopf_format, "json|dot (dot renders the input tree)");

  // fno -------------------------------------------------------------------
  auto* fno_cmd = app.add_subcommand("fno", "Fourier normal ordering rough path values");
  fno_cmd->fallthrough();
  std::string path_file = "generic", fno_word = "12", treedata = "skeleton";
  double fno_s = 0.2, fno_t = 0.8;
  fno_cmd->add_option("--path", path_file, "path model JSON file or 'generic'");
  fno_cmd->add_option("--word", fno_word, "word as digits");
  fno_cmd->add_option("--s", fno_s, "lower time");
  fno_cmd->add_option("--t", fno_t, "upper time");
  fno_cmd->add_option("--treedata", treedata, "skeleton|mock|renormalized");

  // diagram ---------------------------------------------------------------
  auto* diag_cmd = app.add_subcommand("diagram", "tree Feynman diagrams and BPHZ");
  diag_cmd->fallthrough();
  std::string diag_op = "build", diag_file, diag_builtin, mu_file, mu_builtin;
  diag_cmd->add_option("op", diag_op, "build|omega|forests|renormalize|render");
  diag_cmd->add_option("--diagram", diag_file, "diagram JSON file");
  diag_cmd->add_option("--builtin", diag_builtin, "example1|contracted");
  diag_cmd->add_option("--mu", mu_file, "attribution JSON (useful filter)");
  diag_cmd->add_option("--mu-builtin", mu_builtin, "ex1|ex2");
  bool useful = false;
  diag_cmd->add_flag("--useful", useful, "keep only scale-local subtractions");

  // multiscale ------------------------------------------------------------
  auto* ms_cmd = app.add_subcommand("multiscale", "GN trees and forest classification");
  ms_cmd->fallthrough();
  std::string ms_op = "gn-tree", ms_diag_file, ms_builtin = "example1", ms_mu_file,
              ms_mu_builtin = "ex1", ms_format = "json";
  int ms_n = 4, ms_nprime = 0;
  double ms_alpha_minus = 0.15;
  ms_cmd->add_option("op", ms_op, "gn-tree|classify|omega-star|predict");
  ms_cmd->add_option("--diagram", ms_diag_file, "diagram JSON file");
  ms_cmd->add_option("--builtin", ms_builtin, "example1|contracted");
  ms_cmd->add_option("--mu", ms_mu_file, "attribution JSON file");
  ms_cmd->add_option("--mu-builtin", ms_mu_builtin, "ex1|ex2");
  ms_cmd->add_option("--n", ms_n, "half-diagram vertex count parameter");
  ms_cmd->add_option("--nprime", ms_nprime, "grafted order");
  ms_cmd->add_option("--alpha-minus", ms_alpha_minus, "spring exponent");
  ms_cmd->add_option("--format", ms_format, "json|dot");

  // scan ------------------------------------------------------------------
  auto* scan_cmd = app.add_subcommand("scan", "numeric scaling scans (CSV + summary)");
  scan_cmd->fallthrough();
  std::string target = "example1";
  scan_cmd->add_option("--target", target,
                       "example1|example2|holder-n1|holder-n2|fbm-cov");

  // verify ----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  verify_cmd->fallthrough();
  bool quick = false;
  verify_cmd->add_flag("--quick", quick, "exact-algebra suites only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
    app.exit(e);
    return 2;
  }

  try {
    if (!config_file.empty()) {
      QuadratureConfig file_cfg;
      config_update_from_json(file_cfg, load_json(config_file));
      // flag > config file > default
      if (!opt_alpha->count()) cfg.alpha = file_cfg.alpha;
      if (!opt_seed->count()) cfg.rng_seed = file_cfg.rng_seed;
      if (!opt_samples->count()) cfg.mc_samples = file_cfg.mc_samples;
      if (!opt_threads->count()) cfg.threads = file_cfg.threads;
      if (!opt_window->count()) {
        cfg.j_min = file_cfg.j_min;
        cfg.j_max = file_cfg.j_max;
      }
      cfg.M = file_cfg.M;
      cfg.points_per_scale = file_cfg.points_per_scale;
      cfg.strict_integrability = file_cfg.strict_integrability;
    }
    if (opt_window->count()) {
      auto colon = window.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("--window expects a:b");
      cfg.j_min = std::stoi(window.substr(0, colon));
      cfg.j_max = std::stoi(window.substr(colon + 1));
    }

    if (*hopf_cmd) {
      json result;
      if (hopf_op == "coproduct" || hopf_op == "antipode" || hopf_op == "theta") {
        if (tree_file.empty()) throw std::invalid_argument("--tree required");
        auto tree = tree_from_json(load_json(tree_file));
        if (hopf_format == "dot") {
          std::cout << tree_to_dot(tree);
          return 0;
        }
        if (hopf_op == "coproduct") result = tensor_to_json(coproduct(tree));
        if (hopf_op == "antipode") result = lc_forests_to_json(antipode(tree));
        if (hopf_op == "theta") result = lc_words_to_json(theta(tree));
      } else if (hopf_op == "shuffle") {
        result = lc_words_to_json(
            shuffle_product(word_from_string(word_str), word_from_string(word2_str)));
      } else if (hopf_op == "word-coproduct") {
        json arr = json::array();
        for (const auto& [p, c] : word_coproduct(word_from_string(word_str)))
          arr.push_back({{"coeff", c.str()},
                         {"left", word_to_json(p.first)},
                         {"right", word_to_json(p.second)}});
        result = arr;
      } else if (hopf_op == "word-antipode") {
        result = lc_words_to_json(word_antipode(word_from_string(word_str)));
      } else {
        throw std::invalid_argument("unknown hopf op " + hopf_op);
      }
      std::cout << result.dump(2) << std::endl;
      return 0;
    }

    if (*fno_cmd) {
      PathModel path = path_file == "generic" ? PathModel::generic(2, 2, 7)
                                              : path_from_json(load_json(path_file));
      Word w = word_from_string(fno_word);
      path.validate_genericity((int)w.size());
      auto data = make_tree_data(treedata, path, cfg.alpha);
      auto v = rough_path(*data, w, fno_s, fno_t);
      std::vector<Word> words;
      for (int n = 1; n <= std::min<int>(3, (int)w.size()); ++n)
        for (const auto& ww : enumerate_words(n, path.dim())) words.push_back(ww);
      double u = 0.5 * (fno_s + fno_t);
      json result;
      result["word"] = word_to_json(w);
      result["s"] = fno_s;
      result["t"] = fno_t;
      result["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
      result["route_residual"] = v.route_residual();
      result["chen_residual"] = verify_chen(*data, words, fno_s, u, fno_t);
      result["shuffle_residual"] =
          verify_shuffle(*data, {{Word{1}, Word{2}}, {Word{1}, Word{1, 2}}}, fno_s, fno_t);
      std::cout << result.dump(2) << std::endl;
      write_manifest(out, "fno", cfg, result);
      return 0;
    }

    if (*diag_cmd) {
      HalfDiagram d = !diag_file.empty() ? diagram_from_json(load_json(diag_file))
                                         : builtin_diagram(diag_builtin.empty() ? "example1"
                                                                                : diag_builtin);
      json result;
      if (diag_op == "render") {
        std::cout << diagram_to_dot(d);
        return 0;
      }
      if (diag_op == "build") {
        result = diagram_to_json(d);
        result["roots"] = d.roots.size();
        json xi = json::object();
        for (int v = 0; v < d.n(); ++v)
          xi["xi" + std::to_string(v + 1)] = form_str(d.xi_form(v));
        result["xi_forms"] = xi;
        result["external_balance"] = form_str(d.external_balance());
        result["independent_momenta"] = independent_momentum_count(SymmetricDiagram{d});
      } else if (diag_op == "omega") {
        SymmetricDiagram g{d};
        result["omega"] = degree_to_json(omega(g));
        result["omega_half"] = degree_to_json(omega_half(d));
        result["bilateral"] = g.bilateral();
        result["zero_by_symmetry"] = g.zero_by_symmetry();
      } else if (diag_op == "forests") {
        auto members = divergent_members(d);
        json ms = json::array();
        for (const auto& m : members) {
          json verts = json::array(), zeroed = json::array();
          for (int v : m.verts) verts.push_back(v + 1);
          for (int z : m.zeroed) zeroed.push_back("z" + std::to_string(z + 1));
          ms.push_back({{"vertices", verts}, {"tau_zeroes", zeroed}});
        }
        result["members"] = ms;
        result["forest_count"] = enumerate_forests(members).size();
      } else if (diag_op == "renormalize") {
        auto expr = bphz_renormalize(d);
        if (useful) {
          ScaleAttribution mu = !mu_file.empty()
                                    ? attribution_from_json(load_json(mu_file))
                                    : builtin_attribution(mu_builtin.empty() ? "ex1" : mu_builtin);
          expr = filter_useful(expr, mu);
        }
        result["terms"] = expr.terms.size();
        result["pretty"] = expr.str();
        json terms = json::array();
        for (const auto& t : expr.terms) {
          json jt;
          jt["sign"] = t.sign;
          json mem = json::array();
          for (int mi : t.members) {
            json verts = json::array();
            for (int v : expr.members[mi].verts) verts.push_back(v + 1);
            mem.push_back(verts);
          }
          jt["members"] = mem;
          json fs = json::array();
          for (const auto& f : t.factors) {
            const char* kind = f.kind == Factor::AbsHalfMinusAlpha ? "abs^(1/2-a)"
                               : f.kind == Factor::AbsOneMinusTwoAlpha ? "abs^(1-2a)"
                                                                       : "inv";
            fs.push_back({{"kind", kind}, {"line", line_str(f.line)}, {"arg", form_str(f.arg)}});
          }
          jt["factors"] = fs;
          terms.push_back(jt);
        }
        result["expansion"] = terms;
      } else {
        throw std::invalid_argument("unknown diagram op " + diag_op);
      }
      std::cout << result.dump(2) << std::endl;
      return 0;
    }

    if (*ms_cmd) {
      HalfDiagram d = !ms_diag_file.empty() ? diagram_from_json(load_json(ms_diag_file))
                                            : builtin_diagram(ms_builtin);
      ScaleAttribution mu = !ms_mu_file.empty() ? attribution_from_json(load_json(ms_mu_file))
                                                : builtin_attribution(ms_mu_builtin);
      SymmetricDiagram g{d};
      json result;
      if (ms_op == "gn-tree") {
        auto nodes = gn_tree(g, mu);
        if (ms_format == "dot") {
          std::cout << gn_tree_to_dot(nodes);
          return 0;
        }
        json arr = json::array();
        for (const auto& n : nodes) {
          json lines = json::array();
          for (const auto& l : n.g.lines) lines.push_back(line_str(l));
          arr.push_back({{"lines", lines},
                         {"j_low", n.j_low},
                         {"j_high", n.j_high},
                         {"parent", n.parent},
                         {"divergent", is_divergent(d, n.g)}});
        }
        result["nodes"] = arr;
      } else if (ms_op == "classify") {
        auto cls = classify_forest(d, {}, mu);
        auto dump_set = [](const std::vector<Subgraph>& v) {
          json arr = json::array();
          for (const auto& s : v) {
            json lines = json::array();
            for (const auto& l : s.lines) lines.push_back(line_str(l));
            arr.push_back(lines);
          }
          return arr;
        };
        result["forest"] = json::array();
        result["dangerous"] = dump_set(cls.dangerous);
        result["harmless"] = dump_set(cls.harmless);
        result["extension"] = dump_set(cls.extension);
        result["safe"] = cls.safe;
      } else if (ms_op == "omega-star") {
        json arr = json::array();
        for (const auto& e : omega_star_sequence(g, mu))
          arr.push_back({{"j", e.j}, {"omega_star", degree_to_json(e.value)}});
        result["sequence"] = arr;
      } else if (ms_op == "predict") {
        auto b = predict_bound(g, mu, ms_n, ms_nprime, cfg.alpha, ms_alpha_minus);
        result["jref_exponent"] = degree_to_json(b.jref_exponent);
        result["alpha_minus"] = b.alpha_minus;
        json arr = json::array();
        for (const auto& e : b.omega_star_grafted)
          arr.push_back({{"j", e.j}, {"omega_star_grafted", degree_to_json(e.value)}});
        result["omega_star_grafted"] = arr;
      } else {
        throw std::invalid_argument("unknown multiscale op " + ms_op);
      }
      std::cout << result.dump(2) << std::endl;
      return 0;
    }

    if (*scan_cmd) return run_scan(target, cfg, out);

    if (*verify_cmd) {
      auto checks = quick ? quick_checks() : full_checks(cfg.rng_seed);
      bool all = true;
      for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        all = all && c.pass;
      }
      std::cout << (all ? "all checks passed" : "CHECKS FAILED") << std::endl;
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << std::endl;
    return 1;
  }
  return 0;
}

namespace {

AmplitudeEstimate evaluate_example2_routing(const AmplitudeExpression& expr, double zeta1,
                                            const QuadratureConfig& cfg) {
  // the published example-2 region integrates over (xi1, zeta2, zeta3)
  // with zeta4 = zeta1 - zeta2 - xi1; same amplitude, different routing,
  // hence an independent estimator of the example-1 scan
  auto fill = [zeta1](const double* z, std::vector<double>& zeta) {
    zeta[0] = zeta1;
    zeta[1] = z[1];
    zeta[2] = z[2];
    zeta[3] = zeta1 - z[1] - z[0];
  };
  return evaluate_amplitude_routed(expr, 3, fill, cfg);
}

}  // namespace
