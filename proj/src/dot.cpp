#include "hyperlin/dot.hpp"

#include <sstream>

#include "hyperlin/centrality.hpp"
#include "hyperlin/structures.hpp"

namespace hyperlin {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_bipartite(std::ostream& os, const Hypergraph& h, const char* vertex_shape,
                     const char* edge_shape) {
  os << "graph G {\n";
  for (const auto& v : h.vertex_labels()) {
    os << "  " << quote("v:" + v) << " [label=" << quote(v) << ", shape=" << vertex_shape << "];\n";
  }
  for (const auto& e : h.edge_labels()) {
    os << "  " << quote("e:" + e) << " [label=" << quote(e) << ", shape=" << edge_shape << "];\n";
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (auto v : h.edge(e)) {
      os << "  " << quote("v:" + h.vertex_label(v)) << " -- " << quote("e:" + h.edge_label(e)) << ";\n";
    }
  }
  os << "}\n";
}

}  // namespace

std::string incidence_graph_dot(const Hypergraph& h) {
  std::ostringstream os;
  write_bipartite(os, h, "circle", "box");
  return os.str();
}

std::string contraction_dot(const Hypergraph& h) {
  std::ostringstream os;
  write_bipartite(os, unit_contraction(h).contracted, "box", "ellipse");
  return os.str();
}

std::string projection_dot(const Hypergraph& h) {
  const GraphProjection g = graph_projection(h);
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& n : g.nodes) os << "  " << quote(n) << " [shape=box];\n";
  for (const auto& [i, j] : g.edges) os << "  " << quote(g.nodes[i]) << " -- " << quote(g.nodes[j]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hyperlin
