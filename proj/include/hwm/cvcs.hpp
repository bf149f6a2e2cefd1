#pragma once

// Gaussian-state check that a self-inverse coupling matrix produces a
// continuous-variable cluster state with the same graph.
//
// Conventions: quadratures are ordered (q_1..q_n, p_1..p_n), the vacuum has
// unit variance per quadrature, and the dimensionless squeezing parameter r
// absorbs coupling strength and time, so that q(r) = e^{rM} q(0) and
// p(r) = e^{-rM} p(0).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/graph.hpp"
#include "hwm/matcore.hpp"

namespace hwm {

struct CouplingMatrix {
  Eigen::MatrixXd m;

  std::size_t modes() const { return static_cast<std::size_t>(m.rows()); }

  /// W / sqrt(k) for a symmetric weighing matrix W of weight k.
  static CouplingMatrix from_weighing(const TernaryMatrix& w) {
    const auto k = is_weighing(w);
    if (!k || *k == 0) throw Error(ErrorKind::NotSelfInverse, "matrix is not a nonzero weighing matrix");
    if (!is_symmetric(w)) throw Error(ErrorKind::NotSymmetric, "coupling matrix must be symmetric");
    CouplingMatrix c;
    const auto n = static_cast<Eigen::Index>(w.order());
    c.m.resize(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(*k));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) c.m(i, j) = w(i, j) * scale;
    return c;
  }

  CouplingMatrix negated() const { return CouplingMatrix{-m}; }

  /// max |M M - I|.
  double self_inverse_residual() const {
    return (m * m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  }

  SimpleGraph graph() const {
    SimpleGraph g(modes());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = i; j < m.cols(); ++j)
        if (m(i, j) != 0.0 || m(j, i) != 0.0) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
  }
};

struct GaussianState {
  Eigen::MatrixXd covariance;

  std::size_t modes() const { return static_cast<std::size_t>(covariance.rows() / 2); }

  static GaussianState vacuum(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(2 * n);
    return {Eigen::MatrixXd::Identity(d, d)};
  }
};

/// Skew-diagonal indices t = i + j (1-based) carrying nonzero coupling; one pump frequency each.
struct PumpSpectrum {
  std::vector<std::size_t> frequencies;
  std::size_t count() const { return frequencies.size(); }
};

inline PumpSpectrum pump_spectrum(const TernaryMatrix& m) {
  const SkewProfile p = skew_profile(m);
  PumpSpectrum out;
  for (std::size_t t = 2; t <= 2 * m.order(); ++t)
    if (p.at(t) != 0) out.frequencies.push_back(t);
  return out;
}

/// Fewest pump frequencies over the relabellings i -> i + c (mod n). For an
/// anticirculant matrix these are the even rotations of the first row; each
/// gives a weighing matrix with an isomorphic graph. Other Hankel matrices
/// are returned unchanged.
inline std::size_t minimal_pump_count(const TernaryMatrix& m) {
  std::size_t best = pump_spectrum(m).count();
  if (!is_anticirculant(m)) return best;
  const std::size_t n = m.order();
  std::vector<int> row(m.row(0).begin(), m.row(0).end());
  for (std::size_t c = 1; c < n; ++c) {
    std::vector<int> shifted(n);
    for (std::size_t p = 0; p < n; ++p) shifted[p] = row[(p + 2 * c) % n];
    best = std::min(best, pump_spectrum(from_first_row(shifted, Layout::anticirculant)).count());
  }
  return best;
}

namespace detail {

struct Eigensystem {
  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;
};

inline Eigensystem symmetric_eigensystem(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::NumericalFailure, "eigendecomposition failed");
  Eigensystem e{solver.eigenvectors(), solver.eigenvalues()};
  const double residual = (m * e.vectors - e.vectors * e.values.asDiagonal()).cwiseAbs().maxCoeff();
  if (residual > 1e-10) throw Error(ErrorKind::NumericalFailure, "eigendecomposition residual too large");
  return e;
}

inline Eigen::MatrixXd exp_symmetric(const Eigensystem& e, double scale) {
  const Eigen::VectorXd d = (scale * e.values).array().exp().matrix();
  return e.vectors * d.asDiagonal() * e.vectors.transpose();
}

}  // namespace detail

/// S = blockdiag(e^{rM}, e^{-rM}), the symplectic map of the evolution.
inline Eigen::MatrixXd evolution_map(const CouplingMatrix& c, double r) {
  const auto e = detail::symmetric_eigensystem(c.m);
  const auto n = c.m.rows();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  s.topLeftCorner(n, n) = detail::exp_symmetric(e, r);
  s.bottomRightCorner(n, n) = detail::exp_symmetric(e, -r);
  return s;
}

/// Vacuum evolved for squeezing r: covariance blockdiag(e^{2rM}, e^{-2rM}).
inline GaussianState evolve_vacuum(const CouplingMatrix& c, double r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "squeezing parameter must be >= 0");
  const auto e = detail::symmetric_eigensystem(c.m);
  const auto n = c.m.rows();
  GaussianState s;
  s.covariance = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  s.covariance.topLeftCorner(n, n) = detail::exp_symmetric(e, 2 * r);
  s.covariance.bottomRightCorner(n, n) = detail::exp_symmetric(e, -2 * r);
  return s;
}

/// Standard symplectic form [[0, I], [-I, 0]] in (q, p) ordering.
inline Eigen::MatrixXd symplectic_form(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * k, 2 * k);
  omega.topRightCorner(k, k) = Eigen::MatrixXd::Identity(k, k);
  omega.bottomLeftCorner(k, k) = -Eigen::MatrixXd::Identity(k, k);
  return omega;
}

/// Diagonal of Cov(p' - A q') after the local Fourier relabelling
/// (q, p) -> (p, -q) on the modes in `fourier_mask` (0-based).
inline std::vector<double> nullifier_variances(const GaussianState& state, const CouplingMatrix& a,
                                               const std::vector<Vertex>& fourier_mask) {
  const auto n = static_cast<Eigen::Index>(state.modes());
  if (a.m.rows() != n) throw Error(ErrorKind::InvalidArgument, "coupling matrix and state differ in size");
  Eigen::MatrixXd fourier = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (Vertex v : fourier_mask) {
    const auto i = static_cast<Eigen::Index>(v);
    if (i >= n) throw Error(ErrorKind::InvalidArgument, "mask vertex out of range");
    fourier(i, i) = 0;          // q' = p
    fourier(i, n + i) = 1;
    fourier(n + i, n + i) = 0;  // p' = -q
    fourier(n + i, i) = -1;
  }
  Eigen::MatrixXd nullifier(n, 2 * n);
  nullifier.leftCols(n) = -a.m;
  nullifier.rightCols(n) = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd map = nullifier * fourier;
  const Eigen::MatrixXd cov = map * state.covariance * map.transpose();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = cov(i, i);
  return out;
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline constexpr double kExpectedDecayExponent = -2.0;
inline constexpr double kDecayTolerance = 0.05;

struct ClusterCertificate {
  std::vector<Vertex> mask;
  int sign = 1;  // nullifiers use sign * A
  std::vector<double> r_values;
  std::vector<std::vector<double>> variances;  // per r, per mode
  std::vector<double> max_variance;            // per r
  double slope = 0.0;
  bool pass = false;
};

/// Tries the Fourier mask on either side of the bipartition and both signs of
/// A, keeps the combination with the smallest worst-case variance at the
/// largest r, and passes when log(max variance) falls with slope -2 +- 0.05.
inline ClusterCertificate certify_cluster(const CouplingMatrix& c, const std::vector<double>& r_list) {
  if (r_list.size() < 2) throw Error(ErrorKind::InvalidArgument, "decay fit needs at least two r values");
  if (c.self_inverse_residual() > 1e-12) throw Error(ErrorKind::NotSelfInverse, "M*M differs from I");
  const auto parts = is_bipartite(c.graph());
  if (!parts) throw Error(ErrorKind::NotBipartite, "coupling graph is not bipartite");

  const std::size_t last = static_cast<std::size_t>(
      std::max_element(r_list.begin(), r_list.end()) - r_list.begin());
  std::vector<GaussianState> states;
  for (double r : r_list) states.push_back(evolve_vacuum(c, r));

  std::optional<ClusterCertificate> best;
  for (const auto* mask : {&parts->first, &parts->second})
    for (int sign : {1, -1}) {
      const CouplingMatrix a = sign > 0 ? c : c.negated();
      ClusterCertificate cert;
      cert.mask = *mask;
      cert.sign = sign;
      cert.r_values = r_list;
      for (const auto& s : states) {
        auto v = nullifier_variances(s, a, *mask);
        cert.max_variance.push_back(*std::max_element(v.begin(), v.end()));
        cert.variances.push_back(std::move(v));
      }
      if (!best || cert.max_variance[last] < best->max_variance[last]) best = std::move(cert);
    }

  std::vector<double> logs;
  for (double v : best->max_variance) logs.push_back(std::log(v));
  best->slope = fit_slope(best->r_values, logs);
  best->pass = std::abs(best->slope - kExpectedDecayExponent) <= kDecayTolerance;
  return *best;
}

}  // namespace hwm
