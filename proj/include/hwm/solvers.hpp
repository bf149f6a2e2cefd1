#pragma once

// Exact exponential solvers: Hamiltonian cycle and chromatic number.
// Both refuse graphs above a hard vertex bound instead of approximating.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/graph.hpp"

namespace hwm {

struct SolverOptions {
  std::size_t max_vertices = 32;
};

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> neighbour_masks(const SimpleGraph& g) {
  std::vector<Mask> out(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) out[u] |= Mask{1} << v;
  return out;
}

inline void check_bound(const SimpleGraph& g, const SolverOptions& opts, const char* what) {
  if (g.order() > opts.max_vertices || g.order() > 64)
    throw Error(ErrorKind::SizeLimitExceeded,
                std::string(what) + " limited to " + std::to_string(std::min<std::size_t>(opts.max_vertices, 64)) +
                    " vertices");
}

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const SimpleGraph& g) : n_(g.order()), nb_(neighbour_masks(g)) {}

  std::optional<std::vector<Vertex>> run() {
    for (Mask m : nb_)
      if (std::popcount(m) < 2) return std::nullopt;
    path_.assign(1, 0);
    if (extend(Mask{1}, 0)) return path_;
    return std::nullopt;
  }

 private:
  bool extend(Mask visited, Vertex cur) {
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    if (visited == all) return (nb_[cur] & Mask{1}) != 0;

    const Mask free = all & ~visited;
    const Mask open = free | (Mask{1} << cur) | Mask{1};
    // Every unvisited vertex still needs two usable neighbours.
    for (Mask rest = free; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (std::popcount(nb_[w] & open) < 2) return false;
    }
    // The unvisited vertices must stay reachable from the current end.
    Mask reach = Mask{1} << cur, frontier = reach;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nb_[std::countr_zero(f)] & (free | reach);
      frontier = next & ~reach;
      reach |= next;
    }
    if ((reach & free) != free) return false;

    std::vector<std::pair<int, Vertex>> moves;
    for (Mask cand = nb_[cur] & free; cand; cand &= cand - 1) {
      const Vertex w = std::countr_zero(cand);
      moves.emplace_back(std::popcount(nb_[w] & free), w);
    }
    std::sort(moves.begin(), moves.end());
    for (auto [score, w] : moves) {
      path_.push_back(w);
      if (extend(visited | (Mask{1} << w), w)) return true;
      path_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<Mask> nb_;
  std::vector<Vertex> path_;
};

class Colouring {
 public:
  explicit Colouring(const SimpleGraph& g) : n_(g.order()), nb_(neighbour_masks(g)) {}

  bool colourable(std::size_t k) {
    k_ = k;
    colour_.assign(n_, -1);
    return assign(0);
  }

 private:
  // DSATUR order: most distinct neighbour colours first, then highest degree.
  bool assign(std::size_t done) {
    if (done == n_) return true;
    Vertex pick = n_;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour_[v] != -1) continue;
      const int sat = std::popcount(used_by_neighbours(v));
      const int deg = std::popcount(nb_[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const std::uint64_t used = used_by_neighbours(pick);
    int highest = -1;
    for (int c : colour_) highest = std::max(highest, c);
    // Colours above highest+1 are symmetric to highest+1.
    const std::size_t limit = std::min<std::size_t>(k_, static_cast<std::size_t>(highest) + 2);
    for (std::size_t c = 0; c < limit; ++c) {
      if (used & (std::uint64_t{1} << c)) continue;
      colour_[pick] = static_cast<int>(c);
      if (assign(done + 1)) return true;
      colour_[pick] = -1;
    }
    return false;
  }

  std::uint64_t used_by_neighbours(Vertex v) const {
    std::uint64_t used = 0;
    for (Mask m = nb_[v]; m; m &= m - 1) {
      const int c = colour_[std::countr_zero(m)];
      if (c >= 0) used |= std::uint64_t{1} << c;
    }
    return used;
  }

  std::size_t n_;
  std::vector<Mask> nb_;
  std::vector<int> colour_;
  std::size_t k_ = 0;
};

}  // namespace detail

/// A Hamiltonian cycle as a vertex sequence starting at vertex 0 (the closing
/// edge back to 0 is implied). Loops are ignored; graphs on fewer than three
/// vertices have no cycle.
inline std::optional<std::vector<Vertex>> hamiltonian_cycle(const SimpleGraph& g, SolverOptions opts = {}) {
  detail::check_bound(g, opts, "Hamiltonian cycle search");
  if (g.order() < 3) return std::nullopt;
  return detail::HamiltonSearch(g).run();
}

inline bool is_hamiltonian_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  if (g.order() < 3 || cycle.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : cycle) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    if (a == b || !g.adjacent(a, b)) return false;
  }
  return true;
}

/// Exact chromatic number of the loopless part of g.
inline std::size_t chromatic_number_small(const SimpleGraph& g, SolverOptions opts = {}) {
  detail::check_bound(g, opts, "chromatic number");
  if (g.order() == 0) return 0;
  const SimpleGraph plain = g.without_loops();
  if (plain.edge_count() == 0) return 1;
  detail::Colouring solver(plain);
  for (std::size_t k = 2;; ++k)
    if (solver.colourable(k)) return k;
}

}  // namespace hwm
