#pragma once

#include <string>

#include "json.hpp"
#include "rrp/evaluate.hpp"
#include "rrp/hopf.hpp"
#include "rrp/path_model.hpp"
#include "rrp/rough_path.hpp"

namespace rrp {

using nlohmann::json;

// Trees: nested {"decoration": d, "children": [...]}.
json tree_to_json(const DecoratedTree& t);
DecoratedTree tree_from_json(const json& j);

json forest_to_json(const Forest& f);
json word_to_json(const Word& w);
Word word_from_json(const json& j);
Word word_from_string(const std::string& s);  // digits, e.g. "121"

json lc_words_to_json(const LinearComb<Word>& x);
json lc_forests_to_json(const LinearComb<Forest>& x);
json tensor_to_json(const TensorHH& x);

// Path models: {"d": 2, "horizon": 1.0,
//   "modes": [[{"omega": w, "re": a, "im": b}, ...], ...]}.
json path_to_json(const PathModel& p);
PathModel path_from_json(const json& j);

// Diagrams: 1-based vertices, parent 0 marks a root:
//   {"parent": [0,1,2,1], "contractions": [[1,4],[2,3]]}.
json diagram_to_json(const HalfDiagram& d);
HalfDiagram diagram_from_json(const json& j);

// Attributions: {"M": 2, "sigma": {"2": j, ...}, "phi": {"1": j, ...},
//   "root": {"1": j}} with 1-based vertex keys.
json attribution_to_json(const ScaleAttribution& mu);
ScaleAttribution attribution_from_json(const json& j);

json estimate_to_json(const AmplitudeEstimate& e);
json scan_to_json(const ScanResult& r);
json degree_to_json(const DivergenceDegree& d);

json config_to_json(const QuadratureConfig& cfg);
void config_update_from_json(QuadratureConfig& cfg, const json& j);

}  // namespace rrp
