#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hwm/error.hpp"

namespace hwm {

/// Dense square matrix, row-major. Indices are 0-based.
template <typename T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t order() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<long long>;

template <typename T>
SquareMatrix<T> transpose(const SquareMatrix<T>& a) {
  SquareMatrix<T> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) out(j, i) = a(i, j);
  return out;
}

template <typename T>
SquareMatrix<T> multiply(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.order() != b.order())
    throw Error(ErrorKind::InvalidArgument, "multiply: order mismatch");
  const std::size_t n = a.order();
  SquareMatrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <typename T>
SquareMatrix<T> add(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::InvalidArgument, "add: order mismatch");
  SquareMatrix<T> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <typename T>
SquareMatrix<T> scaled_identity(std::size_t n, T k) {
  SquareMatrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = k;
  return out;
}

/// Square matrix over {-1, 0, 1}. The entry set is enforced on every write.
class TernaryMatrix {
 public:
  TernaryMatrix() = default;
  explicit TernaryMatrix(std::size_t n) : cells_(n, 0) {}

  TernaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    *this = from_rows(std::vector<std::vector<int>>(rows.begin(), rows.end()));
  }

  static TernaryMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    TernaryMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw Error(ErrorKind::InvalidArgument, "rows must form a square matrix");
      for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t order() const noexcept { return cells_.order(); }

  int operator()(std::size_t i, std::size_t j) const { return cells_(i, j); }

  void set(std::size_t i, std::size_t j, int value) {
    if (value < -1 || value > 1)
      throw Error(ErrorKind::InvalidArgument,
                  "entry " + std::to_string(value) + " is not in {-1,0,1}");
    cells_(i, j) = static_cast<std::int8_t>(value);
  }

  std::span<const std::int8_t> row(std::size_t i) const { return cells_.row(i); }

  IntMatrix to_int() const {
    IntMatrix out(order());
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j) out(i, j) = cells_(i, j);
    return out;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(order(), std::vector<int>(order()));
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j) out[i][j] = cells_(i, j);
    return out;
  }

  friend bool operator==(const TernaryMatrix&, const TernaryMatrix&) = default;

 private:
  SquareMatrix<std::int8_t> cells_;
};

inline TernaryMatrix transpose(const TernaryMatrix& m) {
  TernaryMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out.set(j, i, m(i, j));
  return out;
}

inline TernaryMatrix negate(const TernaryMatrix& m) {
  TernaryMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out.set(i, j, -m(i, j));
  return out;
}

inline TernaryMatrix identity_matrix(std::size_t n) {
  TernaryMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

/// M * M^T in exact integer arithmetic.
inline IntMatrix gram(const TernaryMatrix& m) {
  const std::size_t n = m.order();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long long acc = 0;
      auto ri = m.row(i), rj = m.row(j);
      for (std::size_t c = 0; c < n; ++c) acc += ri[c] * rj[c];
      out(i, j) = acc;
      out(j, i) = acc;
    }
  return out;
}

}  // namespace hwm
