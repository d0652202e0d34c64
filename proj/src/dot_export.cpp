#include "rrp/dot_export.hpp"

namespace rrp {

namespace {

void tree_nodes(const DecoratedTree& t, int& next, int parent, std::string& out) {
  int id = next++;
  out += "  n" + std::to_string(id) + " [label=\"" + std::to_string(t.dec) + "\"];\n";
  if (parent >= 0)
    out += "  n" + std::to_string(parent) + " -- n" + std::to_string(id) + ";\n";
  for (const auto& c : t.children) tree_nodes(c, next, id, out);
}

}  // namespace

std::string tree_to_dot(const DecoratedTree& t) {
  std::string out = "graph tree {\n  rankdir=BT;\n";
  int next = 0;
  tree_nodes(t, next, -1, out);
  out += "}\n";
  return out;
}

std::string diagram_to_dot(const HalfDiagram& d) {
  std::string out = "graph diagram {\n  rankdir=BT;\n";
  for (int v = 0; v < d.n(); ++v)
    out += "  v" + std::to_string(v + 1) + " [shape=circle,label=\"" +
           std::to_string(v + 1) + "\"];\n";
  for (int v = 0; v < d.n(); ++v) {
    int p = d.forest.parent[v];
    if (p >= 0)
      out += "  v" + std::to_string(p + 1) + " -- v" + std::to_string(v + 1) +
             " [label=\"z" + std::to_string(v + 1) + "\"];\n";
    else
      out += "  root" + std::to_string(v + 1) +
             " [shape=none,label=\"z" + std::to_string(v + 1) + "\"];\n  root" +
             std::to_string(v + 1) + " -- v" + std::to_string(v + 1) + ";\n";
  }
  for (std::size_t i = 0; i < d.contractions.size(); ++i) {
    auto [a, b] = d.contractions[i];
    out += "  v" + std::to_string(a + 1) + " -- v" + std::to_string(b + 1) +
           " [style=bold,color=\"black:black\",label=\"x(" + std::to_string(a + 1) +
           std::to_string(b + 1) + ")\"];\n";
  }
  for (int v = 0; v < d.n(); ++v)
    if (!d.contracted(v)) {
      out += "  m" + std::to_string(v + 1) +
             " [shape=point,label=\"\"];\n  v" + std::to_string(v + 1) + " -- m" +
             std::to_string(v + 1) + " [style=bold,color=\"black:black\",label=\"x" +
             std::to_string(v + 1) + "\"];\n";
    }
  out += "}\n";
  return out;
}

std::string gn_tree_to_dot(const std::vector<GNNode>& nodes) {
  std::string out = "digraph gn {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string label;
    for (const auto& l : nodes[i].g.lines) {
      if (!label.empty()) label += ",";
      label += line_str(l);
    }
    out += "  g" + std::to_string(i) + " [shape=box,label=\"{" + label + "} j in [" +
           std::to_string(nodes[i].j_low) + "," + std::to_string(nodes[i].j_high) +
           "]\"];\n";
    if (nodes[i].parent >= 0)
      out += "  g" + std::to_string(i) + " -> g" + std::to_string(nodes[i].parent) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rrp
