#pragma once

// Undirected graphs with optional loops, plus the basic structural queries.
// Vertices are 0-based in the API; text exports print them as 1..n.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/matcore.hpp"

namespace hwm {

using Vertex = std::size_t;

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t order() const noexcept { return n_; }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
  }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  bool has_loop(Vertex v) const { return adjacent(v, v); }

  /// Number of incident edges; a loop counts once.
  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex w = 0; w < n_; ++w) d += adj_[v * n_ + w];
    return d;
  }

  /// Sorted neighbours, including v itself when it carries a loop.
  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w)
      if (adj_[v * n_ + w]) out.push_back(w);
    return out;
  }

  /// Edges {u,v} with u <= v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  std::size_t loop_count() const {
    std::size_t c = 0;
    for (Vertex v = 0; v < n_; ++v) c += has_loop(v);
    return c;
  }

  bool loopless() const { return loop_count() == 0; }

  /// 0/1 adjacency matrix.
  TernaryMatrix adjacency() const {
    TernaryMatrix a(n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) a.set(u, v, adjacent(u, v) ? 1 : 0);
    return a;
  }

  /// Same graph with loops removed.
  SimpleGraph without_loops() const {
    SimpleGraph g = *this;
    for (Vertex v = 0; v < n_; ++v) g.adj_[v * n_ + v] = 0;
    return g;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= n_) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// True when M(i,j) != 0 exactly when M(j,i) != 0.
inline bool has_symmetric_support(const TernaryMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i + 1; j < m.order(); ++j)
      if ((m(i, j) != 0) != (m(j, i) != 0)) return false;
  return true;
}

/// G(M): i ~ j iff M(i,j) != 0, loops from nonzero diagonal entries. Only the
/// zero pattern has to be symmetric, so circulant weighing matrices with a
/// negation-closed support (CW(6,4) for one) have a graph too.
inline SimpleGraph graph_of_matrix(const TernaryMatrix& m) {
  if (!has_symmetric_support(m))
    throw Error(ErrorKind::NotSymmetric, "graph of a matrix needs a symmetric zero pattern");
  SimpleGraph g(m.order());
  for (Vertex i = 0; i < m.order(); ++i)
    for (Vertex j = i; j < m.order(); ++j)
      if (m(i, j) != 0) g.add_edge(i, j);
  return g;
}

inline SimpleGraph graph_from_adjacency(const TernaryMatrix& a) { return graph_of_matrix(a); }

inline std::optional<std::size_t> is_regular(const SimpleGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// 2-colouring by BFS. The smallest vertex of every component goes to `first`,
/// so an edgeless graph yields ({all}, {}). Loops rule out a colouring.
inline std::optional<Bipartition> is_bipartite(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          q.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

/// Components sorted by their smallest vertex, each sorted ascending.
inline std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w = 0; w < n; ++w)
        if (g.adjacent(u, w) && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

/// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<Vertex>& vertices) {
  SimpleGraph h(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a; b < vertices.size(); ++b)
      if (g.adjacent(vertices[a], vertices[b])) h.add_edge(a, b);
  return h;
}

/// Tensor (direct, Kronecker) product. Vertex (u, u') gets index u * |H| + u',
/// matching kronecker() on adjacency matrices.
inline SimpleGraph tensor_product(const SimpleGraph& g, const SimpleGraph& h) {
  const std::size_t nh = h.order();
  SimpleGraph out(g.order() * nh);
  for (auto [u, v] : g.edges())
    for (auto [a, b] : h.edges()) {
      out.add_edge(u * nh + a, v * nh + b);
      out.add_edge(u * nh + b, v * nh + a);
    }
  return out;
}

/// Predicts connectivity of g x h without building it: both factors connected
/// and at least one of them not bipartite (a loop counts as an odd cycle).
/// An edgeless factor makes the product edgeless.
inline bool connectivity_criterion_tensor(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() == 0 || h.order() == 0) return true;
  if (g.edge_count() == 0 || h.edge_count() == 0) return g.order() * h.order() == 1;
  if (!is_connected(g) || !is_connected(h)) return false;
  return !is_bipartite(g).has_value() || !is_bipartite(h).has_value();
}

inline SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

// Standard small graphs used throughout the tests and fixtures.

inline SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// K_n, or K_n^+ (every vertex looped) when `loops` is set.
inline SimpleGraph complete_graph(std::size_t n, bool loops = false) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = loops ? u : u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

}  // namespace hwm
