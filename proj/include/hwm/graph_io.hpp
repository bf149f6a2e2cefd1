#pragma once

#include <optional>
#include <string>

#include "hwm/graph.hpp"

namespace hwm {

/// Undirected DOT, vertices labelled 1..n, edges in sorted order, loops as self-edges.
inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v + 1) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u + 1) + " -- " + std::to_string(v + 1) + ";\n";
  out += "}\n";
  return out;
}

/// One line per vertex: "v: n1 n2 ...", 1-based, neighbours ascending.
inline std::string to_adjacency_list(const SimpleGraph& g) {
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) {
    out += std::to_string(v + 1) + ":";
    for (Vertex w : g.neighbors(v)) out += " " + std::to_string(w + 1);
    out += '\n';
  }
  return out;
}

struct GraphSummary {
  std::size_t order = 0;
  std::optional<std::size_t> regular_degree;
  bool loopless = true;
  bool connected = false;
  std::size_t component_count = 0;
  bool bipartite = false;
  std::size_t loop_count = 0;
  std::size_t edge_count = 0;
};

inline GraphSummary summarize(const SimpleGraph& g) {
  GraphSummary s;
  s.order = g.order();
  s.regular_degree = is_regular(g);
  s.loop_count = g.loop_count();
  s.loopless = s.loop_count == 0;
  s.component_count = connected_components(g).size();
  s.connected = s.component_count == 1;
  s.bipartite = is_bipartite(g).has_value();
  s.edge_count = g.edge_count();
  return s;
}

}  // namespace hwm
