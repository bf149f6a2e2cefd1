#pragma once

// Exact graph isomorphism by colour refinement plus individualisation.
// Both graphs are refined together so colour ids are comparable across them;
// a branch dies as soon as some colour class has different sizes on the two
// sides. Leaves are checked edge by edge, so a returned map is always valid.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/graph.hpp"

namespace hwm {

struct IsomorphismOptions {
  std::size_t max_vertices = 64;
};

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& g, const SimpleGraph& h) : g_(g), h_(h), n_(g.order()) {}

  std::optional<std::vector<Vertex>> run() {
    std::vector<int> cg(n_, 0), ch(n_, 0);
    return descend(cg, ch);
  }

 private:
  using Signature = std::tuple<int, bool, std::vector<int>>;

  static Signature signature(const SimpleGraph& x, const std::vector<int>& colour, Vertex v) {
    std::vector<int> nb;
    for (Vertex w = 0; w < x.order(); ++w)
      if (w != v && x.adjacent(v, w)) nb.push_back(colour[w]);
    std::sort(nb.begin(), nb.end());
    return {colour[v], x.has_loop(v), std::move(nb)};
  }

  // Refines to the coarsest equitable colouring; false if the sides diverge.
  bool refine(std::vector<int>& cg, std::vector<int>& ch) const {
    std::size_t classes = count_classes(cg, ch);
    for (;;) {
      std::map<Signature, int> ids;
      std::vector<Signature> sg(n_), sh(n_);
      for (Vertex v = 0; v < n_; ++v) {
        sg[v] = signature(g_, cg, v);
        sh[v] = signature(h_, ch, v);
        ids.emplace(sg[v], 0);
        ids.emplace(sh[v], 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (Vertex v = 0; v < n_; ++v) {
        cg[v] = ids[sg[v]];
        ch[v] = ids[sh[v]];
      }
      std::vector<int> count(ids.size(), 0);
      for (Vertex v = 0; v < n_; ++v) {
        ++count[cg[v]];
        --count[ch[v]];
      }
      if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  static std::size_t count_classes(const std::vector<int>& cg, const std::vector<int>& ch) {
    std::vector<int> all(cg);
    all.insert(all.end(), ch.begin(), ch.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }

  std::optional<std::vector<Vertex>> descend(std::vector<int> cg, std::vector<int> ch) {
    if (!refine(cg, ch)) return std::nullopt;

    std::map<int, std::size_t> class_size;
    for (int c : cg) ++class_size[c];
    int target = -1;
    std::size_t best = 0;
    for (auto [c, size] : class_size)
      if (size > 1 && (target == -1 || size < best)) {
        target = c;
        best = size;
      }

    if (target == -1) {
      std::vector<Vertex> map(n_);
      std::map<int, Vertex> in_h;
      for (Vertex w = 0; w < n_; ++w) in_h[ch[w]] = w;
      for (Vertex v = 0; v < n_; ++v) map[v] = in_h.at(cg[v]);
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u; v < n_; ++v)
          if (g_.adjacent(u, v) != h_.adjacent(map[u], map[v])) return std::nullopt;
      return map;
    }

    Vertex v = 0;
    while (cg[v] != target) ++v;
    const int fresh = *std::max_element(cg.begin(), cg.end()) + 1;
    for (Vertex w = 0; w < n_; ++w) {
      if (ch[w] != target) continue;
      auto ng = cg, nh = ch;
      ng[v] = fresh;
      nh[w] = fresh;
      if (auto found = descend(std::move(ng), std::move(nh))) return found;
    }
    return std::nullopt;
  }

  const SimpleGraph& g_;
  const SimpleGraph& h_;
  std::size_t n_;
};

}  // namespace detail

/// Returns phi with g.adjacent(u,v) == h.adjacent(phi[u], phi[v]) for all u, v,
/// or nothing when g and h are not isomorphic.
inline std::optional<std::vector<Vertex>> are_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                                                        IsomorphismOptions opts = {}) {
  if (g.order() > opts.max_vertices || h.order() > opts.max_vertices)
    throw Error(ErrorKind::SizeLimitExceeded, "isomorphism test limited to " +
                                                  std::to_string(opts.max_vertices) + " vertices");
  if (g.order() != h.order() || g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count())
    return std::nullopt;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  return detail::IsoSearch(g, h).run();
}

inline bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const std::vector<Vertex>& map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (Vertex x : map) {
    if (x >= h.order() || hit[x]) return false;
    hit[x] = true;
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

}  // namespace hwm
