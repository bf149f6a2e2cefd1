#pragma once

// Anticirculant graphs from unsigned symbols, and their decomposition into
// symmetric permutation matrices.

#include <cstddef>
#include <numeric>
#include <vector>

#include "hwm/graph.hpp"
#include "hwm/matcore.hpp"

namespace hwm {

/// Graph whose adjacency matrix is anticirculant with first-row support `symbol` (1-based).
inline SimpleGraph anticirculant_graph(std::size_t n, const std::vector<std::size_t>& symbol) {
  return graph_of_matrix(from_symbol(Symbol::unsigned_symbol(n, symbol), Layout::anticirculant));
}

/// P_s: the involution pairing row i with column j whenever i + j = s + 1 (mod n), 1-based.
inline TernaryMatrix symbol_permutation(std::size_t n, std::size_t s) {
  return from_symbol(Symbol::unsigned_symbol(n, {s}), Layout::anticirculant);
}

/// Unsigned symbol of an anticirculant graph: 1-based columns of row 1's neighbours.
inline std::vector<std::size_t> graph_symbol(const SimpleGraph& g) {
  std::vector<std::size_t> out;
  for (Vertex v : g.neighbors(0)) out.push_back(v + 1);
  return out;
}

/// gcd of all pairwise symbol differences together with n.
inline std::size_t symbol_difference_gcd(std::size_t n, const std::vector<std::size_t>& symbol) {
  std::size_t g = n;
  for (std::size_t i = 0; i < symbol.size(); ++i)
    for (std::size_t j = i + 1; j < symbol.size(); ++j) {
      const std::size_t d = symbol[j] > symbol[i] ? symbol[j] - symbol[i] : symbol[i] - symbol[j];
      g = std::gcd(g, d);
    }
  return g;
}

}  // namespace hwm
