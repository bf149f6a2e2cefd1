#pragma once

// Structural predicates and constructors for ternary matrices.
//
// User-facing coordinates are 1-based: symbol positions run over [1..n] and
// skew-diagonal indices over t = i + j in [2..2n]. Matrix element access via
// TernaryMatrix::operator() stays 0-based.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/matrix.hpp"

namespace hwm {

enum class Layout { anticirculant, circulant };

/// Returns k when M M^T = k I, otherwise nothing. The zero matrix has weight 0.
inline std::optional<int> is_weighing(const TernaryMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return std::nullopt;
  const IntMatrix g = gram(m);
  const long long k = g(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != (i == j ? k : 0)) return std::nullopt;
  return static_cast<int>(k);
}

inline bool is_symmetric(const TernaryMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i + 1; j < m.order(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

inline bool is_hollow(const TernaryMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i)
    if (m(i, i) != 0) return false;
  return true;
}

inline bool is_hankel(const TernaryMatrix& m) {
  const std::size_t n = m.order();
  // Each entry must equal its up-right neighbour on the same skew-diagonal.
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (m(i, j) != m(i - 1, j + 1)) return false;
  return true;
}

inline bool is_circulant(const TernaryMatrix& m) {
  const std::size_t n = m.order();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != m(0, (j + n - i) % n)) return false;
  return true;
}

/// Constant skew-diagonals, indexed by t = i + j over [2..2n] (1-based rows
/// and columns). A matrix has 2n - 1 of them.
class SkewProfile {
 public:
  SkewProfile() = default;

  SkewProfile(std::size_t n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    if (n_ == 0) throw Error(ErrorKind::InvalidArgument, "skew profile order must be positive");
    if (values_.size() != 2 * n_ - 1)
      throw Error(ErrorKind::InvalidArgument, "skew profile needs exactly 2n-1 values");
    for (int v : values_)
      if (v < -1 || v > 1) throw Error(ErrorKind::InvalidArgument, "skew value not in {-1,0,1}");
  }

  std::size_t order() const noexcept { return n_; }
  const std::vector<int>& values() const noexcept { return values_; }

  int at(std::size_t t) const {
    if (t < 2 || t > 2 * n_) throw Error(ErrorKind::InvalidArgument, "skew index out of [2..2n]");
    return values_[t - 2];
  }

  /// The main diagonal entry (i,i) lies on t = 2i, so hollow means every even t is zero.
  bool hollow() const {
    for (std::size_t t = 2; t <= 2 * n_; t += 2)
      if (at(t) != 0) return false;
    return true;
  }

  TernaryMatrix to_matrix() const {
    TernaryMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.set(i, j, values_[i + j]);
    return m;
  }

  friend bool operator==(const SkewProfile&, const SkewProfile&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> values_;
};

inline SkewProfile skew_profile(const TernaryMatrix& m) {
  if (!is_hankel(m)) throw Error(ErrorKind::NotHankel, "matrix has a non-constant skew-diagonal");
  const std::size_t n = m.order();
  std::vector<int> values(2 * n - 1);
  for (std::size_t s = 0; s + 1 < 2 * n; ++s) {
    const std::size_t i = s < n ? 0 : s - (n - 1);
    values[s] = m(i, s - i);
  }
  return SkewProfile(n, std::move(values));
}

inline bool is_anticirculant(const TernaryMatrix& m) {
  if (!is_hankel(m)) return false;
  const std::size_t n = m.order();
  const auto p = skew_profile(m);
  for (std::size_t t = 2; t <= n; ++t)
    if (p.at(t) != p.at(t + n)) return false;
  return true;
}

/// Signed support of a first row. For the anticirculant layout a position s
/// is the column of row 1; for the circulant layout it is the shift j - i
/// taken mod n, with s = n standing for shift 0.
struct Symbol {
  std::size_t n = 0;
  std::vector<std::size_t> support;
  std::vector<int> signs;

  Symbol() = default;
  Symbol(std::size_t order, std::vector<std::size_t> positions, std::vector<int> sign_list)
      : n(order), support(std::move(positions)), signs(std::move(sign_list)) {
    validate();
  }

  /// All signs +1.
  static Symbol unsigned_symbol(std::size_t order, std::vector<std::size_t> positions) {
    std::vector<int> s(positions.size(), 1);
    return Symbol(order, std::move(positions), std::move(s));
  }

  void validate() const {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "symbol order must be positive");
    if (signs.size() != support.size())
      throw Error(ErrorKind::InvalidArgument, "symbol signs and support differ in length");
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i] < 1 || support[i] > n)
        throw Error(ErrorKind::InvalidArgument, "symbol position outside [1..n]");
      if (i > 0 && support[i] <= support[i - 1])
        throw Error(ErrorKind::InvalidArgument, "symbol positions must be strictly increasing");
      if (signs[i] != 1 && signs[i] != -1)
        throw Error(ErrorKind::InvalidArgument, "symbol sign must be +1 or -1");
    }
  }

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Dense signed first row (0-based vector of length n) of a symbol.
inline std::vector<int> first_row_of(const Symbol& s, Layout layout) {
  std::vector<int> row(s.n, 0);
  for (std::size_t i = 0; i < s.support.size(); ++i) {
    const std::size_t pos = layout == Layout::anticirculant ? s.support[i] - 1 : s.support[i] % s.n;
    row[pos] = s.signs[i];
  }
  return row;
}

/// Builds the matrix whose first row is `row` (0-based, length n).
/// Anticirculant: entry(i,j) = row[(i+j) mod n]; circulant: entry(i,j) = row[(j-i) mod n].
inline TernaryMatrix from_first_row(std::span<const int> row, Layout layout) {
  const std::size_t n = row.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "first row must be nonempty");
  TernaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, layout == Layout::anticirculant ? row[(i + j) % n] : row[(j + n - i) % n]);
  return m;
}

inline TernaryMatrix from_symbol(const Symbol& s, Layout layout) {
  s.validate();
  const auto row = first_row_of(s, layout);
  return from_first_row(row, layout);
}

/// Reads the signed symbol back out of row 1.
inline Symbol symbol_of(const TernaryMatrix& m, Layout layout) {
  const std::size_t n = m.order();
  Symbol s;
  s.n = n;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    const std::size_t col = layout == Layout::anticirculant ? pos - 1 : pos % n;
    const int v = m(0, col);
    if (v != 0) {
      s.support.push_back(pos);
      s.signs.push_back(v);
    }
  }
  return s;
}

/// Ones on the antidiagonal.
inline TernaryMatrix exchange_matrix(std::size_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "exchange matrix order must be >= 1");
  TernaryMatrix f(t);
  for (std::size_t i = 0; i < t; ++i) f.set(i, t - 1 - i, 1);
  return f;
}

/// M times the exchange matrix: column j becomes column n-1-j.
inline TernaryMatrix reverse_columns(const TernaryMatrix& m) {
  const std::size_t n = m.order();
  TernaryMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, m(i, n - 1 - j));
  return out;
}

inline TernaryMatrix kronecker(const TernaryMatrix& a, const TernaryMatrix& b) {
  const std::size_t na = a.order(), nb = b.order();
  TernaryMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const int aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out.set(i * nb + k, j * nb + l, aij * b(k, l));
    }
  return out;
}

}  // namespace hwm
