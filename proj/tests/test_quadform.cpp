#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

#include "hosc/errors.hpp"
#include "hosc/quadform.hpp"

using namespace hosc;

namespace {

// Independent 2x2 symmetric eigenvalues from the characteristic polynomial.
std::pair<double, double> char_poly_roots(const Eigen::Matrix2d& m) {
  const double tr = m.trace();
  const double det = m.determinant();
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  return {tr / 2 + disc, tr / 2 - disc};
}

}  // namespace

TEST_CASE("Lambda rejects lambda2 = 0 and non-finite input") {
  CHECK_THROWS_AS(Lambda(1.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(Lambda(0.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(Lambda(NAN, 1.0), InvalidParameter);
  CHECK_THROWS_AS(Lambda(1.0, INFINITY), InvalidParameter);
  CHECK_NOTHROW(Lambda(0.0, -1e-300));
}

TEST_CASE("potential matrix") {
  const Eigen::Matrix2d m = potential_matrix(Lambda(2.0, -3.0));
  CHECK(m(0, 0) == 13.0);
  CHECK(m(0, 1) == 6.0);
  CHECK(m(1, 0) == 6.0);
  CHECK(m(1, 1) == 9.0);
  // (l1 u1 - l2 u2)^2 + (l2 u1)^2 at u = (1.5, -0.5).
  const Eigen::Vector2d u(1.5, -0.5);
  const double direct = std::pow(2.0 * 1.5 - (-3.0) * (-0.5), 2) + std::pow(-3.0 * 1.5, 2);
  CHECK(u.dot(m * u) == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("diagonalize: lambda = (0, 1) is the identity") {
  const auto d = diagonalize(Lambda(0.0, 1.0));
  CHECK(d.mu_plus == 1.0);
  CHECK(d.mu_minus == 1.0);
  CHECK(d.rotation == Eigen::Matrix2d::Identity());
  const Eigen::Vector2d u(0.3, -4.0);
  CHECK(to_principal_axes(d, u) == u);
}

TEST_CASE("diagonalize: lambda = (1, 1)") {
  const auto d = diagonalize(Lambda(1.0, 1.0));
  CHECK(d.mu_plus == doctest::Approx((3.0 + std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(d.mu_minus == doctest::Approx((3.0 - std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(d.mu_plus == doctest::Approx(2.618034).epsilon(1e-6));
  CHECK(d.mu_minus == doctest::Approx(0.381966).epsilon(1e-6));
  const auto [hi, lo] = char_poly_roots(d.m_matrix);
  CHECK(std::abs(hi - d.mu_plus) < 1e-13);
  CHECK(std::abs(lo - d.mu_minus) < 1e-13);

  const Eigen::Vector2d p = to_principal_axes(d, Eigen::Vector2d(1.0, 0.0));
  CHECK(d.mu_plus * p[0] * p[0] + d.mu_minus * p[1] * p[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(to_principal_axes(d, Eigen::Vector2d::Zero()) == Eigen::Vector2d::Zero());
}

TEST_CASE("diagonalize: determinant identity at lambda = (2, -3)") {
  const auto d = diagonalize(Lambda(2.0, -3.0));
  CHECK(d.mu_plus * d.mu_minus == doctest::Approx(81.0).epsilon(1e-14));
  CHECK(d.mu_plus + d.mu_minus == doctest::Approx(4.0 + 18.0).epsilon(1e-14));
}

TEST_CASE("diagonalize: invariants and sign convention over random lambda") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  for (int k = 0; k < 500; ++k) {
    double l2 = unif(rng);
    if (l2 == 0.0) l2 = 1.0;
    const Lambda lambda(unif(rng), l2);
    const auto d = diagonalize(lambda);
    CHECK(d.mu_plus >= d.mu_minus);
    CHECK(d.mu_minus > 0.0);
    CHECK((d.rotation.transpose() * d.rotation - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    const Eigen::Matrix2d diag = Eigen::Vector2d(d.mu_plus, d.mu_minus).asDiagonal();
    const double scale = d.m_matrix.cwiseAbs().maxCoeff();
    CHECK((d.rotation.transpose() * d.m_matrix * d.rotation - diag).cwiseAbs().maxCoeff() < 1e-12 * scale);
    for (int c = 0; c < 2; ++c) {
      const double first = d.rotation(0, c) != 0.0 ? d.rotation(0, c) : d.rotation(1, c);
      CHECK(first > 0.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(d.m_matrix);
    CHECK(std::abs(es.eigenvalues()[1] - d.mu_plus) <= 1e-13 * scale);
    CHECK(std::abs(es.eigenvalues()[0] - d.mu_minus) <= 1e-13 * scale);
  }
}

TEST_CASE("property: quadratic form preserved for 1000 random (lambda, u)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(-4.0, 4.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Lambda lambda(unif(rng), unif(rng) + 4.5);
    const auto d = diagonalize(lambda);
    const Eigen::Vector2d u(unif(rng), unif(rng));
    const Eigen::Vector2d p = to_principal_axes(d, u);
    const double lhs = u.dot(d.m_matrix * u);
    worst = std::max(worst, std::abs(lhs - (d.mu_plus * p[0] * p[0] + d.mu_minus * p[1] * p[1])) / lhs);
    CHECK(p.norm() == doctest::Approx(u.norm()).epsilon(1e-14));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("property: homogeneity of mu") {
  const auto base = diagonalize(Lambda(0.7, -1.3));
  for (double s : {0.1, 0.5, 2.0, 17.0}) {
    const auto scaled = diagonalize(Lambda(0.7 * s, -1.3 * s));
    CHECK(scaled.mu_plus == doctest::Approx(s * s * base.mu_plus).epsilon(1e-14));
    CHECK(scaled.mu_minus == doctest::Approx(s * s * base.mu_minus).epsilon(1e-14));
  }
}

TEST_CASE("property: continuity as lambda1 -> 0") {
  for (double l1 : {1e-3, 1e-6, 1e-9, -1e-12}) {
    const auto d = diagonalize(Lambda(l1, 2.0));
    CHECK(d.mu_plus == doctest::Approx(4.0).epsilon(1e-2));
    CHECK(d.mu_minus == doctest::Approx(4.0).epsilon(1e-2));
    const Eigen::Vector2d u(0.8, -1.1);
    const Eigen::Vector2d p = to_principal_axes(d, u);
    CHECK(u.dot(d.m_matrix * u) ==
          doctest::Approx(d.mu_plus * p[0] * p[0] + d.mu_minus * p[1] * p[1]).epsilon(1e-12));
  }
}

TEST_CASE("explicit eigenvector columns agree with the rotation up to order and sign") {
  for (auto [l1, l2] : {std::pair{1.0, 1.0}, {2.0, -1.0}, {-0.5, 2.0}, {3.0, 0.25}}) {
    const Lambda lambda(l1, l2);
    const auto d = diagonalize(lambda);
    const Eigen::Matrix2d k = explicit_eigenvector_matrix(lambda);
    // Each column is a unit eigenvector of M.
    for (int c = 0; c < 2; ++c) {
      const Eigen::Vector2d v = k.col(c);
      CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
      const double rq = v.dot(d.m_matrix * v);
      CHECK((d.m_matrix * v - rq * v).norm() < 1e-12 * d.m_matrix.norm());
    }
    // |k^T R| is a permutation matrix.
    const Eigen::Matrix2d overlap = (k.transpose() * d.rotation).cwiseAbs();
    const bool straight = std::abs(overlap(0, 0) - 1) < 1e-12 && std::abs(overlap(1, 1) - 1) < 1e-12;
    const bool swapped = std::abs(overlap(0, 1) - 1) < 1e-12 && std::abs(overlap(1, 0) - 1) < 1e-12;
    CHECK((straight || swapped));
  }
  CHECK_THROWS_AS(explicit_eigenvector_matrix(Lambda(0.0, 1.0)), InvalidParameter);
}
