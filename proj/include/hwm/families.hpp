#pragma once

// Named weighing-matrix constructions of weight 4 and weight 2.
//
// Interlacing takes the interlace count t directly: interlace(M, t) = M (x) F_t
// has order n * t. The literature names M_{n,k,l} for the interlaced families
// correspond to t = 2l for the "order 8l" and "order 12l" readings; both
// readings coincide at l = 1, t = 2.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/graph.hpp"
#include "hwm/graph_io.hpp"
#include "hwm/matcore.hpp"

namespace hwm {

enum class Family {
  AW44,
  AW64,
  AW74,
  CW64,
  M44_interlaced,
  M64_interlaced,
  M74_interlaced,
  HW_weight2_blocks,
  M64_block_family,
};

inline constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::AW44, "AW44"},
    {Family::AW64, "AW64"},
    {Family::AW74, "AW74"},
    {Family::CW64, "CW64"},
    {Family::M44_interlaced, "M44_interlaced"},
    {Family::M64_interlaced, "M64_interlaced"},
    {Family::M74_interlaced, "M74_interlaced"},
    {Family::HW_weight2_blocks, "HW_weight2_blocks"},
    {Family::M64_block_family, "M64_block_family"},
};

inline std::string_view to_string(Family f) {
  for (auto [family, name] : kFamilyNames)
    if (family == f) return name;
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (auto [family, text] : kFamilyNames)
    if (text == name) return family;
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

/// Parameters per family:
///   AW44, AW64, AW74, CW64         : none
///   M44_interlaced                 : {t} or {t, offset}
///   M64_interlaced, M74_interlaced : {t}
///   HW_weight2_blocks              : {n_half}
///   M64_block_family               : {m}
struct FamilyDescriptor {
  Family family = Family::AW44;
  std::vector<long long> parameters;
};

/// The four printed base matrices, each given by its signed first row.
inline TernaryMatrix base_matrix(Family f) {
  switch (f) {
    case Family::AW44: {
      const std::vector<int> row{1, 1, 1, -1};
      return from_first_row(row, Layout::anticirculant);
    }
    case Family::AW64: {
      const std::vector<int> row{-1, 1, 0, 1, 1, 0};
      return from_first_row(row, Layout::anticirculant);
    }
    case Family::AW74: {
      const std::vector<int> row{0, 1, 0, 1, 1, -1, 0};
      return from_first_row(row, Layout::anticirculant);
    }
    case Family::CW64: {
      const std::vector<int> row{0, 1, 1, 0, 1, -1};
      return from_first_row(row, Layout::circulant);
    }
    default:
      throw Error(ErrorKind::UnknownFamily, std::string(to_string(f)) + " is not a base matrix");
  }
}

/// m (x) F_t. Preserves the weight and anticirculance; hollowness depends on the instance.
inline TernaryMatrix interlace(const TernaryMatrix& m, std::size_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "interlace count must be >= 1");
  return kronecker(m, exchange_matrix(t));
}

inline std::vector<int> rotate_left(std::vector<int> row, std::size_t by) {
  if (!row.empty()) std::rotate(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(by % row.size()), row.end());
  return row;
}

/// Interlaced M_{4,4} with its first row shifted left by 2*offset. The shifted
/// rows are rows of the unshifted matrix, so the weight is unchanged.
inline TernaryMatrix m44_interlaced(std::size_t t, std::size_t offset = 0) {
  const TernaryMatrix base = interlace(base_matrix(Family::AW44), t);
  if (offset == 0) return base;
  if (t % 2 != 0 || offset >= t / 2)
    throw Error(ErrorKind::InvalidArgument, "offset needs even t and offset in [0..t/2-1]");
  std::vector<int> row(base.row(0).begin(), base.row(0).end());
  return from_first_row(rotate_left(std::move(row), 2 * offset), Layout::anticirculant);
}

/// [[F, F], [F, -F]] with F the exchange matrix of order n_half; U U^T = 2I.
inline TernaryMatrix weight2_block(std::size_t n_half) {
  if (n_half == 0) throw Error(ErrorKind::InvalidArgument, "n_half must be >= 1");
  const std::size_t n = 2 * n_half;
  TernaryMatrix u(n);
  for (std::size_t i = 0; i < n_half; ++i) {
    const std::size_t j = n_half - 1 - i;
    u.set(i, j, 1);
    u.set(i, n_half + j, 1);
    u.set(n_half + i, j, 1);
    u.set(n_half + i, n_half + j, -1);
  }
  return u;
}

/// Anticirculant AW(4m, 4) with signed symbol (-2, +4, +(2m+2), +(2m+4)).
/// At m = 3 this is the 12x12 block matrix [[A', B'], [B', A']].
inline TernaryMatrix m64_block_member(std::size_t m) {
  if (m < 3) throw Error(ErrorKind::OrderTooSmall, "block family needs m >= 3");
  const Symbol s(4 * m, {2, 4, 2 * m + 2, 2 * m + 4}, {-1, 1, 1, 1});
  return from_symbol(s, Layout::anticirculant);
}

/// Top-left and top-right n/2 blocks of an even-order matrix.
inline std::pair<TernaryMatrix, TernaryMatrix> top_blocks(const TernaryMatrix& m) {
  const std::size_t h = m.order() / 2;
  TernaryMatrix a(h), b(h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      a.set(i, j, m(i, j));
      b.set(i, j, m(i, h + j));
    }
  return {a, b};
}

namespace detail {

inline std::size_t param(const FamilyDescriptor& d, std::size_t index, const char* name, long long min) {
  if (index >= d.parameters.size())
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(d.family)) + " needs parameter " + name);
  const long long v = d.parameters[index];
  if (v < min)
    throw Error(d.family == Family::M64_block_family ? ErrorKind::OrderTooSmall : ErrorKind::InvalidArgument,
                std::string(name) + " must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

inline void expect_params(const FamilyDescriptor& d, std::size_t lo, std::size_t hi) {
  if (d.parameters.size() < lo || d.parameters.size() > hi)
    throw Error(ErrorKind::InvalidArgument,
                std::string(to_string(d.family)) + ": wrong number of parameters");
}

}  // namespace detail

inline TernaryMatrix construct(const FamilyDescriptor& d) {
  switch (d.family) {
    case Family::AW44:
    case Family::AW64:
    case Family::AW74:
    case Family::CW64:
      detail::expect_params(d, 0, 0);
      return base_matrix(d.family);
    case Family::M44_interlaced: {
      detail::expect_params(d, 1, 2);
      const auto t = detail::param(d, 0, "t", 1);
      const auto offset = d.parameters.size() > 1 ? detail::param(d, 1, "offset", 0) : 0;
      return m44_interlaced(t, offset);
    }
    case Family::M64_interlaced:
      detail::expect_params(d, 1, 1);
      return interlace(base_matrix(Family::AW64), detail::param(d, 0, "t", 1));
    case Family::M74_interlaced:
      detail::expect_params(d, 1, 1);
      return interlace(base_matrix(Family::AW74), detail::param(d, 0, "t", 1));
    case Family::HW_weight2_blocks:
      detail::expect_params(d, 1, 1);
      return weight2_block(detail::param(d, 0, "n_half", 1));
    case Family::M64_block_family:
      detail::expect_params(d, 1, 1);
      return m64_block_member(detail::param(d, 0, "m", 3));
  }
  throw Error(ErrorKind::UnknownFamily, "unhandled family");
}

inline int declared_weight(Family f) { return f == Family::HW_weight2_blocks ? 2 : 4; }

struct FamilySignature {
  std::size_t order = 0;
  std::optional<int> weight;
  std::optional<std::size_t> regular_degree;
  bool hollow = false;
  bool connected = false;
  std::size_t component_count = 0;
  bool bipartite = false;

  friend bool operator==(const FamilySignature&, const FamilySignature&) = default;
};

/// Weighing and graph facts for a constructed member.
inline FamilySignature family_graph_signature(const FamilyDescriptor& d) {
  const TernaryMatrix m = construct(d);
  FamilySignature sig;
  sig.order = m.order();
  sig.weight = is_weighing(m);
  sig.hollow = is_hollow(m);
  const SimpleGraph g = graph_of_matrix(m);
  const GraphSummary s = summarize(g);
  sig.regular_degree = s.regular_degree;
  sig.connected = s.connected;
  sig.component_count = s.component_count;
  sig.bipartite = s.bipartite;
  return sig;
}

}  // namespace hwm
