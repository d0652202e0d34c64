#include "rrp/json_io.hpp"

#include <stdexcept>

namespace rrp {

json tree_to_json(const DecoratedTree& t) {
  json j;
  j["decoration"] = t.dec;
  j["children"] = json::array();
  for (const auto& c : t.children) j["children"].push_back(tree_to_json(c));
  return j;
}

DecoratedTree tree_from_json(const json& j) {
  int dec = j.at("decoration").get<int>();
  std::vector<DecoratedTree> ch;
  if (j.contains("children"))
    for (const auto& c : j.at("children")) ch.push_back(tree_from_json(c));
  return DecoratedTree::node(dec, std::move(ch));
}

json forest_to_json(const Forest& f) {
  json j = json::array();
  for (const auto& t : f) j.push_back(tree_to_json(t));
  return j;
}

json word_to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j) { return j.get<Word>(); }

Word word_from_string(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c < '1' || c > '9') throw std::invalid_argument("word letters must be digits 1-9");
    w.push_back(c - '0');
  }
  return w;
}

json lc_words_to_json(const LinearComb<Word>& x) {
  json j = json::array();
  for (const auto& [w, c] : x)
    j.push_back({{"coeff", c.str()}, {"word", word_to_json(w)}});
  return j;
}

json lc_forests_to_json(const LinearComb<Forest>& x) {
  json j = json::array();
  for (const auto& [f, c] : x)
    j.push_back({{"coeff", c.str()}, {"forest", forest_to_json(f)}});
  return j;
}

json tensor_to_json(const TensorHH& x) {
  json j = json::array();
  for (const auto& [p, c] : x)
    j.push_back({{"coeff", c.str()},
                 {"left", forest_to_json(p.first)},
                 {"right", forest_to_json(p.second)}});
  return j;
}

json path_to_json(const PathModel& p) {
  json j;
  j["d"] = p.dim();
  j["horizon"] = p.horizon();
  j["modes"] = json::array();
  for (int c = 1; c <= p.dim(); ++c) {
    json coord = json::array();
    for (const auto& m : p.modes(c))
      coord.push_back({{"omega", m.omega}, {"re", m.amp.real()}, {"im", m.amp.imag()}});
    j["modes"].push_back(coord);
  }
  return j;
}

PathModel path_from_json(const json& j) {
  int d = j.at("d").get<int>();
  double horizon = j.value("horizon", 1.0);
  std::vector<std::vector<Mode>> modes(d);
  const auto& jm = j.at("modes");
  if ((int)jm.size() != d) throw std::invalid_argument("modes array size != d");
  for (int c = 0; c < d; ++c)
    for (const auto& m : jm[c])
      modes[c].push_back(
          {m.at("omega").get<double>(),
           cplx(m.value("re", 0.0), m.value("im", 0.0))});
  return PathModel(d, horizon, std::move(modes));
}

json diagram_to_json(const HalfDiagram& d) {
  json j;
  std::vector<int> parent;
  for (int v = 0; v < d.n(); ++v) parent.push_back(d.forest.parent[v] + 1);
  j["parent"] = parent;
  j["contractions"] = json::array();
  for (const auto& [a, b] : d.contractions) j["contractions"].push_back({a + 1, b + 1});
  return j;
}

HalfDiagram diagram_from_json(const json& j) {
  HeapForest f;
  for (int p : j.at("parent").get<std::vector<int>>()) f.parent.push_back(p - 1);
  std::vector<std::pair<int, int>> contr;
  if (j.contains("contractions"))
    for (const auto& c : j.at("contractions"))
      contr.push_back({c.at(0).get<int>() - 1, c.at(1).get<int>() - 1});
  if (!f.heap_ordered())
    throw std::invalid_argument("parent must satisfy parent(v) < v (heap order)");
  return build_half_diagram(f, contr);
}

json attribution_to_json(const ScaleAttribution& mu) {
  json j;
  j["M"] = mu.M;
  for (const auto& [l, scale] : mu.j) {
    const char* kind = l.kind == LineId::SigmaEdge ? "sigma"
                       : l.kind == LineId::RootLeg ? "root"
                                                   : "phi";
    j[kind][std::to_string(l.v + 1)] = scale;
  }
  return j;
}

ScaleAttribution attribution_from_json(const json& j) {
  ScaleAttribution mu;
  mu.M = j.value("M", 2.0);
  auto read = [&](const char* kind, LineId::Kind k) {
    if (!j.contains(kind)) return;
    for (const auto& [key, val] : j.at(kind).items())
      mu.j[{k, std::stoi(key) - 1}] = val.get<int>();
  };
  read("sigma", LineId::SigmaEdge);
  read("root", LineId::RootLeg);
  read("phi", LineId::PhiLeg);
  return mu;
}

json estimate_to_json(const AmplitudeEstimate& e) {
  return {{"value", e.value}, {"std_error", e.std_error}, {"n_samples", e.n_samples}};
}

json scan_to_json(const ScanResult& r) {
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"x", p.x},
                   {"value", p.y.value},
                   {"std_error", p.y.std_error},
                   {"n_samples", p.y.n_samples}});
  return {{"points", pts},
          {"slope", r.slope},
          {"slope_err", r.slope_err},
          {"intercept", r.intercept},
          {"n_used", r.n_used}};
}

json degree_to_json(const DivergenceDegree& d) {
  return {{"const", d.a.str()}, {"alpha_coeff", d.b.str()}, {"text", d.str()}};
}

json config_to_json(const QuadratureConfig& cfg) {
  return {{"M", cfg.M},
          {"j_min", cfg.j_min},
          {"j_max", cfg.j_max},
          {"points_per_scale", cfg.points_per_scale},
          {"mc_samples", cfg.mc_samples},
          {"rng_seed", cfg.rng_seed},
          {"alpha", cfg.alpha},
          {"threads", cfg.threads},
          {"strict_integrability", cfg.strict_integrability}};
}

void config_update_from_json(QuadratureConfig& cfg, const json& j) {
  cfg.M = j.value("M", cfg.M);
  cfg.j_min = j.value("j_min", cfg.j_min);
  cfg.j_max = j.value("j_max", cfg.j_max);
  cfg.points_per_scale = j.value("points_per_scale", cfg.points_per_scale);
  cfg.mc_samples = j.value("mc_samples", cfg.mc_samples);
  cfg.rng_seed = j.value("rng_seed", cfg.rng_seed);
  cfg.alpha = j.value("alpha", cfg.alpha);
  cfg.threads = j.value("threads", cfg.threads);
  cfg.strict_integrability = j.value("strict_integrability", cfg.strict_integrability);
}

}  // namespace rrp
