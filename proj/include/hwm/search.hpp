#pragma once

// Exhaustive pruned enumeration of anticirculant and Hankel hollow weighing
// matrices.
//
// Anticirculant: the signed first row r is assigned position by position.
// An anticirculant matrix is weighing iff the cyclic autocorrelation of r
// vanishes at every nonzero shift, so partial autocorrelations prune.
//
// Hankel hollow: only odd skew-diagonals t = 3, 5, ..., 2n-1 can be nonzero.
// They are assigned in increasing t; row nonzero counts and partial inner
// products of same-parity rows prune. Rows of different parity are
// orthogonal automatically because one of every pair of entries lies on an
// even skew-diagonal.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/matcore.hpp"

namespace hwm {

enum class Structure { anticirculant, hankel_hollow };

inline std::string_view to_string(Structure s) {
  return s == Structure::anticirculant ? "anticirculant" : "hankel_hollow";
}

inline Structure parse_structure(std::string_view s) {
  if (s == "anticirculant") return Structure::anticirculant;
  if (s == "hankel_hollow") return Structure::hankel_hollow;
  throw Error(ErrorKind::InvalidArgument, "unknown structure '" + std::string(s) + "'");
}

/// Largest Hankel hollow order searched without an explicit override.
inline constexpr std::size_t kHankelOrderBound = 28;

struct SearchSpec {
  std::size_t order = 1;
  std::size_t weight = 0;
  Structure structure = Structure::anticirculant;
  bool canonicalize = false;
  std::optional<std::size_t> limit;
  bool allow_large = false;

  void validate() const {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
    if (weight > order) throw Error(ErrorKind::InvalidArgument, "weight must lie in [0..order]");
    if (structure == Structure::hankel_hollow && order > kHankelOrderBound && !allow_large)
      throw Error(ErrorKind::SizeLimitExceeded,
                  "hankel_hollow search above order " + std::to_string(kHankelOrderBound) +
                      " needs an explicit override");
  }
};

/// A solution is a signed first row (anticirculant, length n) or a full skew
/// profile (hankel_hollow, length 2n-1, index 0 <-> t = 2).
using Coordinates = std::vector<int>;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t leaves = 0;
  std::size_t subtrees = 0;
  std::size_t resumed_subtrees = 0;
};

struct SearchResult {
  SearchSpec spec;
  std::vector<Coordinates> solutions;
  SearchStats stats;
  double wall_seconds = 0.0;

  std::size_t count() const { return solutions.size(); }
};

inline TernaryMatrix solution_matrix(Structure s, std::size_t n, const Coordinates& c) {
  if (s == Structure::anticirculant) return from_first_row(c, Layout::anticirculant);
  return SkewProfile(n, c).to_matrix();
}

/// Callback for each solution; returning false stops the search.
using SolutionSink = std::function<bool(const Coordinates&)>;

namespace detail {

class AnticirculantEngine {
 public:
  AnticirculantEngine(std::size_t n, std::size_t k) : n_(n), k_(k), row_(n, 0), corr_(n, 0) {}

  std::size_t variables() const { return n_; }

  /// Enumerates below `prefix`; returns false if the sink asked to stop.
  bool run(const std::vector<int>& prefix, const SolutionSink& sink, SearchStats& stats) {
    stats_ = &stats;
    sink_ = &sink;
    std::fill(row_.begin(), row_.end(), 0);
    std::fill(corr_.begin(), corr_.end(), 0);
    placed_ = 0;
    for (std::size_t p = 0; p < prefix.size(); ++p) {
      ++stats.nodes;
      assign(p, prefix[p], +1);
      if (!feasible(p + 1)) {
        ++stats.pruned;
        return true;
      }
    }
    return descend(prefix.size());
  }

 private:
  void assign(std::size_t p, int x, int dir) {
    if (x == 0) return;
    for (std::size_t q = 0; q < p; ++q) {
      if (row_[q] == 0) continue;
      const int term = dir * x * row_[q];
      corr_[(q + n_ - p) % n_] += term;
      corr_[(p + n_ - q) % n_] += term;
    }
    row_[p] = dir > 0 ? x : 0;
    placed_ += dir > 0 ? 1 : -1;
  }

  bool feasible(std::size_t assigned) const {
    if (placed_ > k_) return false;
    const std::size_t remaining = k_ - placed_;
    if (remaining > n_ - assigned) return false;
    for (std::size_t s = 1; s < n_; ++s)
      if (static_cast<std::size_t>(std::abs(corr_[s])) > 2 * remaining) return false;
    return true;
  }

  bool descend(std::size_t p) {
    if (p == n_) {
      ++stats_->leaves;
      for (std::size_t s = 1; s < n_; ++s)
        if (corr_[s] != 0) return true;
      return (*sink_)(row_);
    }
    for (int x : {-1, 0, 1}) {
      ++stats_->nodes;
      assign(p, x, +1);
      bool keep_going = true;
      if (feasible(p + 1))
        keep_going = descend(p + 1);
      else
        ++stats_->pruned;
      if (x != 0) assign(p, x, -1);
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t n_, k_;
  std::vector<int> row_;
  std::vector<int> corr_;
  std::size_t placed_ = 0;
  SearchStats* stats_ = nullptr;
  const SolutionSink* sink_ = nullptr;
};

class HankelHollowEngine {
 public:
  HankelHollowEngine(std::size_t n, std::size_t k)
      : n_(n), k_(k), values_(2 * n + 1, 0), row_nnz_(n + 1, 0), inner_((n + 1) * (n + 1), 0) {}

  /// One variable per odd skew-diagonal t = 3, 5, ..., 2n-1.
  std::size_t variables() const { return n_ - 1; }

  bool run(const std::vector<int>& prefix, const SolutionSink& sink, SearchStats& stats) {
    stats_ = &stats;
    sink_ = &sink;
    std::fill(values_.begin(), values_.end(), 0);
    std::fill(row_nnz_.begin(), row_nnz_.end(), 0);
    std::fill(inner_.begin(), inner_.end(), 0);
    for (std::size_t v = 0; v < prefix.size(); ++v) {
      ++stats.nodes;
      assign(diag(v), prefix[v], +1);
      if (!feasible(diag(v))) {
        ++stats.pruned;
        return true;
      }
    }
    return descend(prefix.size());
  }

 private:
  static std::size_t diag(std::size_t var) { return 2 * var + 3; }

  long long& inner(std::size_t a, std::size_t b) { return inner_[a * (n_ + 1) + b]; }
  long long inner(std::size_t a, std::size_t b) const { return inner_[a * (n_ + 1) + b]; }

  // Rows a (1-based) meeting skew-diagonal t: column b = t - a in [1..n].
  void assign(std::size_t t, int x, int dir) {
    if (x == 0) return;
    const std::size_t lo = t > n_ ? t - n_ : 1;
    const std::size_t hi = std::min(n_, t - 1);
    for (std::size_t a = lo; a <= hi; ++a) {
      const std::size_t b = t - a;
      row_nnz_[a] += dir;
      // Earlier same-parity rows a2 < a see column b on skew-diagonal a2 + b < t.
      for (std::size_t a2 = (a % 2 == 0 ? 2 : 1); a2 < a; a2 += 2) {
        const int other = values_[a2 + b];
        if (other != 0) inner(a2, a) += static_cast<long long>(dir) * x * other;
      }
    }
    values_[t] = dir > 0 ? x : 0;
  }

  // Odd skew-diagonals strictly after t that still touch row a.
  std::size_t open_in_row(std::size_t a, std::size_t t) const {
    const std::size_t last = std::min(a + n_, 2 * n_ - 1);
    if (last <= t) return 0;
    const std::size_t first = std::max(t + 1, a + 1);
    std::size_t count = 0;
    for (std::size_t u = first; u <= last; ++u) count += (u % 2 == 1);
    return count;
  }

  bool feasible(std::size_t t) const {
    for (std::size_t a = 1; a <= n_; ++a) {
      const std::size_t nnz = static_cast<std::size_t>(row_nnz_[a]);
      if (nnz > k_ || nnz + open_in_row(a, t) < k_) return false;
    }
    for (std::size_t a = 1; a <= n_; ++a)
      for (std::size_t a2 = a + 2; a2 <= n_; a2 += 2) {
        // Column j is undecided while a2 + j > t.
        const std::size_t decided = t > a2 ? std::min(n_, t - a2) : 0;
        const std::size_t open = n_ - decided;
        if (static_cast<std::size_t>(std::llabs(inner(a, a2))) > open) return false;
      }
    return true;
  }

  bool descend(std::size_t var) {
    if (var == variables()) {
      ++stats_->leaves;
      for (std::size_t a = 1; a <= n_; ++a)
        if (static_cast<std::size_t>(row_nnz_[a]) != k_) return true;
      for (std::size_t a = 1; a <= n_; ++a)
        for (std::size_t a2 = a + 2; a2 <= n_; a2 += 2)
          if (inner(a, a2) != 0) return true;
      Coordinates profile(values_.begin() + 2, values_.begin() + 2 + static_cast<std::ptrdiff_t>(2 * n_ - 1));
      return (*sink_)(profile);
    }
    const std::size_t t = diag(var);
    for (int x : {-1, 0, 1}) {
      ++stats_->nodes;
      assign(t, x, +1);
      bool keep_going = true;
      if (feasible(t))
        keep_going = descend(var + 1);
      else
        ++stats_->pruned;
      if (x != 0) assign(t, x, -1);
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t n_, k_;
  std::vector<int> values_;
  std::vector<int> row_nnz_;
  std::vector<long long> inner_;
  SearchStats* stats_ = nullptr;
  const SolutionSink* sink_ = nullptr;
};

}  // namespace detail

/// Enumerates the subtree under `prefix` (values from {-1,0,1} for the first
/// prefix.size() variables). Solutions arrive in increasing lexicographic order.
inline bool search_subtree(const SearchSpec& spec, const std::vector<int>& prefix, const SolutionSink& sink,
                           SearchStats& stats) {
  if (spec.structure == Structure::anticirculant) {
    detail::AnticirculantEngine engine(spec.order, spec.weight);
    return engine.run(prefix, sink, stats);
  }
  detail::HankelHollowEngine engine(spec.order, spec.weight);
  return engine.run(prefix, sink, stats);
}

inline std::size_t search_variables(const SearchSpec& spec) {
  return spec.structure == Structure::anticirculant ? spec.order : spec.order - 1;
}

/// Lexicographically least member of the orbit under the symmetry group:
/// anticirculant rows by even cyclic rotation, global sign flip and
/// reversal; skew profiles by sign flip and reversal (i <-> n+1-i).
inline Coordinates canonical_form(Structure s, const Coordinates& c) {
  Coordinates best = c;
  auto consider = [&](const Coordinates& x) {
    if (x < best) best = x;
  };
  for (int flip = 0; flip < 2; ++flip) {
    Coordinates base = c;
    if (flip) std::reverse(base.begin(), base.end());
    for (int sign : {1, -1}) {
      Coordinates signed_base = base;
      for (int& v : signed_base) v *= sign;
      if (s == Structure::hankel_hollow) {
        consider(signed_base);
        continue;
      }
      const std::size_t n = signed_base.size();
      for (std::size_t shift = 0; shift < n; ++shift) {
        Coordinates rotated(n);
        for (std::size_t p = 0; p < n; ++p) rotated[p] = signed_base[(p + 2 * shift) % n];
        consider(rotated);
      }
    }
  }
  return best;
}

}  // namespace hwm
