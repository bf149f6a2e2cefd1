#pragma once

// Cayley graphs of cyclic and dihedral groups.

#include <cstddef>
#include <set>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/graph.hpp"

namespace hwm {

/// X(Z_n, T): g ~ g + s for s in T. T must be closed under negation mod n.
inline SimpleGraph cayley_cyclic(std::size_t n, const std::set<std::size_t>& generators) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
  for (std::size_t s : generators) {
    if (s < 1 || s >= n) throw Error(ErrorKind::NotSymmetricSet, "generator outside [1..n-1]");
    if (!generators.contains(n - s))
      throw Error(ErrorKind::NotSymmetricSet, "generator set not closed under negation");
  }
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t s : generators) g.add_edge(v, (v + s) % n);
  return g;
}

/// Element s^f t^a of D_2k, with f in {0,1} and a in [0..k-1].
struct DihedralElement {
  bool reflection = false;
  std::size_t exponent = 0;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// Group law of D_2k = <s,t : t^k = s^2 = e, sts = t^-1>, using t^a s = s t^-a.
inline DihedralElement dihedral_multiply(std::size_t k, DihedralElement x, DihedralElement y) {
  const std::size_t a = y.reflection ? (k - x.exponent % k) % k : x.exponent % k;
  return {x.reflection != y.reflection, (a + y.exponent) % k};
}

/// Position of an element in the ordering e, s, t, st, t^2, st^2, ...
inline std::size_t dihedral_index(DihedralElement x) { return 2 * x.exponent + (x.reflection ? 1 : 0); }

inline DihedralElement dihedral_element(std::size_t index) { return {index % 2 == 1, index / 2}; }

/// X(D_2k, {s t^l : l in exponents}) with g ~ g * s t^l. Vertices follow the
/// interleaved order e, s, t, st, ..., so the reflection s t^l acts on the
/// vertex set as the anticirculant permutation with symbol element 2 + 2l.
inline SimpleGraph cayley_dihedral(std::size_t k, const std::set<std::size_t>& exponents) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "dihedral parameter k must be >= 1");
  for (std::size_t l : exponents)
    if (l >= k) throw Error(ErrorKind::ExponentOutOfRange, "reflection exponent outside [0..k-1]");
  SimpleGraph g(2 * k);
  for (std::size_t v = 0; v < 2 * k; ++v)
    for (std::size_t l : exponents) {
      const auto w = dihedral_multiply(k, dihedral_element(v), DihedralElement{true, l});
      g.add_edge(v, dihedral_index(w));
    }
  return g;
}

/// Symbol of a loopless anticirculant graph mapped onto reflections: s -> (s-2)/2.
inline std::set<std::size_t> reflection_exponents(const std::vector<std::size_t>& symbol) {
  std::set<std::size_t> out;
  for (std::size_t s : symbol) {
    if (s < 2 || s % 2 != 0)
      throw Error(ErrorKind::InvalidArgument, "only even symbol elements map onto reflections");
    out.insert((s - 2) / 2);
  }
  return out;
}

}  // namespace hwm
