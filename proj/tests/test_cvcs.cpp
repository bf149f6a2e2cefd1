#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hwm/cvcs.hpp"
#include "hwm/families.hpp"
#include "hwm/isomorphism.hpp"
#include "test_util.hpp"

using namespace hwm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const std::vector<double> kRs{0.5, 1.0, 1.5, 2.0};

CouplingMatrix swap2() { return CouplingMatrix::from_weighing(exchange_matrix(2)); }

}  // namespace

TEST_CASE("pump spectrum") {
  SECTION("AW(8,4) uses the seven odd skew-diagonals") {
    const auto p = pump_spectrum(test::fixture("AW84"));
    REQUIRE(p.frequencies == std::vector<std::size_t>{3, 5, 7, 9, 11, 13, 15});
    REQUIRE(minimal_pump_count(test::fixture("AW84")) == 7);
  }
  SECTION("weight-2 blocks need three pumps") {
    for (std::size_t h : {2u, 4u, 6u, 8u}) {
      REQUIRE(pump_spectrum(weight2_block(h)).count() == 3);
      REQUIRE(minimal_pump_count(weight2_block(h)) == 3);
    }
    REQUIRE(pump_spectrum(weight2_block(4)).frequencies == std::vector<std::size_t>{5, 9, 13});
  }
  SECTION("zero matrix needs none") { REQUIRE(pump_spectrum(TernaryMatrix(4)).count() == 0); }
  SECTION("circulant input is not Hankel") {
    try {
      (void)pump_spectrum(test::fixture("CW64"));
      FAIL("expected NotHankel");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NotHankel);
    }
  }
  SECTION("block members: 8 bands as printed, 7 after an even relabelling") {
    for (std::size_t m = 3; m <= 8; ++m) {
      REQUIRE(pump_spectrum(m64_block_member(m)).count() == 8);
      REQUIRE(minimal_pump_count(m64_block_member(m)) == 7);
    }
  }
}

TEST_CASE("coupling matrix") {
  const auto c = CouplingMatrix::from_weighing(test::fixture("AW84"));
  REQUIRE(c.self_inverse_residual() < 1e-12);
  REQUIRE(c.m(0, 1) == 0.5);
  REQUIRE_THROWS_AS(CouplingMatrix::from_weighing(TernaryMatrix{{1, 1}, {1, 1}}), Error);
  REQUIRE_THROWS_AS(CouplingMatrix::from_weighing(TernaryMatrix(3)), Error);
  try {
    (void)CouplingMatrix::from_weighing(test::fixture("CW64"));
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::NotSymmetric);
  }
}

TEST_CASE("vacuum evolution") {
  SECTION("r = 0 is the vacuum") {
    const auto s = evolve_vacuum(CouplingMatrix::from_weighing(test::fixture("AW84")), 0.0);
    REQUIRE((s.covariance - GaussianState::vacuum(8).covariance).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("two modes, r = 1: eigenvalues e^2 and e^-2 in each block") {
    const auto s = evolve_vacuum(swap2(), 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> q(s.covariance.topLeftCorner(2, 2));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> p(s.covariance.bottomRightCorner(2, 2));
    REQUIRE_THAT(q.eigenvalues()(0), WithinRel(std::exp(-2.0), 1e-12));
    REQUIRE_THAT(q.eigenvalues()(1), WithinRel(std::exp(2.0), 1e-12));
    REQUIRE_THAT(p.eigenvalues()(0), WithinRel(std::exp(-2.0), 1e-12));
    REQUIRE_THAT(p.eigenvalues()(1), WithinRel(std::exp(2.0), 1e-12));
  }
  SECTION("M^2 = I gives q-block cosh(2r) I + sinh(2r) M") {
    for (const char* name : {"AW84", "M124"}) {
      const auto c = CouplingMatrix::from_weighing(test::fixture(name));
      const auto n = c.m.rows();
      for (double r : kRs) {
        const auto s = evolve_vacuum(c, r);
        const Eigen::MatrixXd q = std::cosh(2 * r) * Eigen::MatrixXd::Identity(n, n) + std::sinh(2 * r) * c.m;
        const Eigen::MatrixXd p = std::cosh(2 * r) * Eigen::MatrixXd::Identity(n, n) - std::sinh(2 * r) * c.m;
        REQUIRE((s.covariance.topLeftCorner(n, n) - q).cwiseAbs().maxCoeff() < 1e-10);
        REQUIRE((s.covariance.bottomRightCorner(n, n) - p).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
  SECTION("symplectic and pure") {
    const auto c = CouplingMatrix::from_weighing(test::fixture("AW84"));
    const auto omega = symplectic_form(8);
    for (double r : {0.0, 0.5, 1.0, 2.0, 3.0}) {
      const auto s = evolution_map(c, r);
      REQUIRE((s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() < 1e-10);
      REQUIRE_THAT(evolve_vacuum(c, r).covariance.determinant(), WithinAbs(1.0, 1e-8));
    }
  }
  SECTION("negative r is rejected") { REQUIRE_THROWS_AS(evolve_vacuum(swap2(), -0.1), Error); }
}

TEST_CASE("nullifier variances") {
  SECTION("two modes with mode 2 Fourier-relabelled: both variances 2 e^{-2r}") {
    for (double r : kRs) {
      const auto v = nullifier_variances(evolve_vacuum(swap2(), r), swap2().negated(), {1});
      for (double x : v) REQUIRE_THAT(x, WithinRel(2 * std::exp(-2 * r), 1e-12));
    }
  }
  SECTION("vacuum with no mask gives 1 + sum_j A_ij^2") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + rng() % 6;
      CouplingMatrix a{Eigen::MatrixXd::Zero(n, n)};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a.m(i, j) = a.m(j, i) = static_cast<double>(static_cast<int>(rng() % 3) - 1);
      const auto v = nullifier_variances(GaussianState::vacuum(n), a, {});
      for (std::size_t i = 0; i < n; ++i)
        REQUIRE_THAT(v[i], WithinAbs(1.0 + a.m.row(static_cast<Eigen::Index>(i)).squaredNorm(), 1e-9));
    }
  }
  SECTION("AW(8,4)/2 with the even vertices relabelled decays like e^{-2r}") {
    const auto c = CouplingMatrix::from_weighing(test::fixture("AW84"));
    const std::vector<Vertex> even{1, 3, 5, 7};
    std::vector<double> prev;
    for (double r : {0.5, 1.0, 2.0}) {
      auto a = nullifier_variances(evolve_vacuum(c, r), c, even);
      auto b = nullifier_variances(evolve_vacuum(c, r), c.negated(), even);
      const auto& v = *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end()) ? a : b;
      for (double x : v) REQUIRE_THAT(x, WithinRel(2 * std::exp(-2 * r), 1e-9));
    }
  }
  SECTION("mask out of range") { REQUIRE_THROWS_AS(nullifier_variances(GaussianState::vacuum(2), swap2(), {2}), Error); }
}

TEST_CASE("cluster certification") {
  const std::vector<TernaryMatrix> inputs{test::fixture("AW84"), weight2_block(4), m64_block_member(3)};
  for (const auto& w : inputs) {
    const auto c = CouplingMatrix::from_weighing(w);
    const auto cert = certify_cluster(c, kRs);
    REQUIRE(cert.pass);
    REQUIRE_THAT(cert.slope, WithinAbs(-2.0, 0.05));
    for (std::size_t i = 1; i < cert.max_variance.size(); ++i) REQUIRE(cert.max_variance[i] < cert.max_variance[i - 1]);
    const auto flipped = certify_cluster(c.negated(), kRs);
    REQUIRE(flipped.pass);
    REQUIRE_THAT(flipped.slope, WithinAbs(cert.slope, 1e-9));
  }
  SECTION("weight-2 graph is C4 + C4") {
    REQUIRE(are_isomorphic(CouplingMatrix::from_weighing(weight2_block(4)).graph(),
                           disjoint_union(cycle_graph(4), cycle_graph(4))));
  }
  SECTION("M^2 != I is rejected") {
    std::mt19937 rng(47);
    CouplingMatrix a{Eigen::MatrixXd::Zero(6, 6)};
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j) a.m(i, j) = a.m(j, i) = rng() % 2 ? 1.0 : -1.0;
    try {
      (void)certify_cluster(a, kRs);
      FAIL("expected NotSelfInverse");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NotSelfInverse);
    }
  }
  SECTION("loops make the graph non-bipartite") {
    try {
      (void)certify_cluster(CouplingMatrix::from_weighing(test::fixture("M64")), kRs);
      FAIL("expected NotBipartite");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NotBipartite);
    }
  }
  SECTION("one r value is not enough") {
    REQUIRE_THROWS_AS(certify_cluster(CouplingMatrix::from_weighing(test::fixture("AW84")), {1.0}), Error);
  }
}
