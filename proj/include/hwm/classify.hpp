#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hwm/anticirculant.hpp"
#include "hwm/error.hpp"
#include "hwm/graph.hpp"
#include "hwm/isomorphism.hpp"
#include "hwm/search_driver.hpp"

namespace hwm {

struct Weight2Row {
  std::size_t order = 0;
  std::size_t count = 0;
  bool exists = false;
  bool expected_exists = false;
  /// Every graph found is a disjoint union of order/4 four-cycles.
  bool all_unions_of_c4 = true;
};

struct Weight2Report {
  std::vector<Weight2Row> rows;

  bool consistent() const {
    for (const auto& r : rows)
      if (r.exists != r.expected_exists || !r.all_unions_of_c4) return false;
    return true;
  }
};

/// True when every component of g is a 4-cycle and there are exactly n/4 of them.
inline bool is_union_of_c4(const SimpleGraph& g) {
  const auto comps = connected_components(g);
  if (g.order() % 4 != 0 || comps.size() != g.order() / 4) return false;
  const SimpleGraph c4 = cycle_graph(4);
  for (const auto& comp : comps)
    if (!are_isomorphic(induced_subgraph(g, comp), c4)) return false;
  return true;
}

/// Hankel hollow weighing matrices of weight 2 for every even order up to n_max:
/// they exist exactly when 4 divides the order, and their graphs are unions of C4.
inline Weight2Report classify_weight2(std::size_t n_max) {
  if (n_max > 24) throw Error(ErrorKind::SizeLimitExceeded, "weight-2 classification limited to n <= 24");
  Weight2Report report;
  for (std::size_t n = 2; n <= n_max; n += 2) {
    SearchSpec spec;
    spec.order = n;
    spec.weight = 2;
    spec.structure = Structure::hankel_hollow;
    const auto result = search_hankel_hollow(spec);
    Weight2Row row;
    row.order = n;
    row.count = result.count();
    row.exists = row.count > 0;
    row.expected_exists = n % 4 == 0;
    for (const auto& c : result.solutions)
      if (!is_union_of_c4(graph_of_matrix(solution_matrix(spec.structure, n, c)))) row.all_unions_of_c4 = false;
    report.rows.push_back(row);
  }
  return report;
}

struct AnticirculantGraphCount {
  std::size_t order = 0;
  /// per_degree[d] for d in [0..n]; only 1..n-1 are populated.
  std::vector<std::uint64_t> per_degree;
  std::uint64_t total = 0;
};

/// Counts anticirculant graphs on n vertices by enumerating every symbol with
/// 1 <= #S <= n-1. Distinct symbols give distinct first rows, hence distinct graphs.
inline AnticirculantGraphCount count_anticirculant_graphs(std::size_t n) {
  if (n < 1 || n > 20) throw Error(ErrorKind::SizeLimitExceeded, "graph count limited to 1 <= n <= 20");
  AnticirculantGraphCount out;
  out.order = n;
  out.per_degree.assign(n + 1, 0);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    ++out.per_degree[std::popcount(mask)];
    ++out.total;
  }
  return out;
}

/// Searches the anticirculant weighing matrices of the same order and weight
/// for one whose graph is isomorphic to g. Returns its signed first row.
inline std::optional<Coordinates> isomorphic_anticirculant(const SimpleGraph& g, std::size_t weight) {
  SearchSpec spec;
  spec.order = g.order();
  spec.weight = weight;
  spec.structure = Structure::anticirculant;
  for (const auto& row : search_anticirculant(spec).solutions) {
    const SimpleGraph h = graph_of_matrix(from_first_row(row, Layout::anticirculant));
    if (are_isomorphic(g, h)) return row;
  }
  return std::nullopt;
}

}  // namespace hwm
