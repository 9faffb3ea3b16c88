#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hosc/eigensystem.hpp"
#include "hosc/errors.hpp"
#include "hosc/spectral.hpp"
#include "hosc/transforms.hpp"

using namespace hosc;
using namespace hosc::spectral;
using std::numbers::pi;

namespace {

Axis self_dual(int count, double lambda2) {
  return Axis::with_count(count, std::sqrt(2.0 * pi / (std::abs(lambda2) * count)));
}

struct Setup {
  Axis xy;
  Axis t;
};

Setup small_grid(double lambda2) { return {self_dual(49, lambda2), Axis::with_count(33, 0.6)}; }

// Smooth packet on (x, y, t) with random offsets, decaying on every face.
GridFunction random_packet(std::mt19937_64& rng, const Setup& g) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double cx = 0.8 * unif(rng);
  const double cy = 0.8 * unif(rng);
  const double k = unif(rng);
  const Complex a(unif(rng), unif(rng));
  const Complex b(unif(rng), unif(rng));
  return GridFunction::sample3(g.xy, g.xy, g.t, [&](double x, double y, double s) {
    const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
    return (a + b * x * y) * std::exp(-0.6 * r2 - s * s / 6.0) * std::polar(1.0, k * s);
  });
}

// Builds f whose central transform at every canonical l1 is w(l1) T h_{(l1, l2), m}.
GridFunction eigen_packet(double lambda2, ModeIndex m, const Setup& g) {
  GridFunction zero(std::vector<Axis>{g.xy, g.xy, g.t});
  transforms::CentralFourier tr = transforms::partial_fourier_central(zero);
  for (std::size_t k = 0; k < tr.lambda1.size(); ++k) {
    const Lambda lambda(tr.lambda1[k], lambda2);
    const double w = std::exp(-tr.lambda1[k] * tr.lambda1[k]);
    tr.slices[k] = w * transforms::intertwiner_T(lambda, eigenfunction_grid(lambda, m, g.xy, g.xy));
  }
  return transforms::inverse_partial_fourier_central(tr);
}

}  // namespace

TEST_CASE("coefficients: a single transported mode gives a delta") {
  const double lambda2 = 1.0;
  const Setup g{self_dual(65, lambda2), Axis::with_count(65, 0.25)};
  const ModeIndex m0(2, 1);
  const Lambda lambda(0.0, lambda2);
  const GridFunction th = transforms::intertwiner_T(lambda, eigenfunction_grid(lambda, m0, g.xy, g.xy));
  // int e^{-t^2/2} / sqrt(2 pi) dt = 1, so F_0 f = T h_{m0}.
  const GridFunction f = GridFunction::sample3(g.xy, g.xy, g.t, [&](double, double, double s) {
    return Complex(std::exp(-s * s / 2) / std::sqrt(2 * pi));
  });
  GridFunction prod(f.axes());
  for (int i = 0; i < g.xy.count(); ++i)
    for (int j = 0; j < g.xy.count(); ++j)
      for (int l = 0; l < g.t.count(); ++l) prod.at(i, j, l) = f.at(i, j, l) * th.at(i, j);
  const std::vector<double> samples{0.0};
  const auto c = coefficients(prod, lambda2, samples, ModeCutoff{5, 5});
  REQUIRE(c.values.size() == 1);
  CHECK_FALSE(c.accuracy_warning);
  double worst = 0.0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      worst = std::max(worst, std::abs(c.at(0, ModeIndex(a, b)) - (ModeIndex(a, b) == m0 ? 1.0 : 0.0)));
  CHECK(worst < 1e-8);
}

TEST_CASE("coefficients of zero vanish; bad input rejected") {
  const Setup g = small_grid(1.0);
  const GridFunction zero(std::vector<Axis>{g.xy, g.xy, g.t});
  const auto c = coefficients(zero, 1.0, ModeCutoff{4, 4});
  CHECK(c.lambda1.size() == 33);
  for (const auto& v : c.values) CHECK(v.cwiseAbs().maxCoeff() == 0.0);
  CHECK(c.weighted_energy() == 0.0);
  CHECK_THROWS_AS(coefficients(zero, 0.0, ModeCutoff{4, 4}), InvalidParameter);
  CHECK_THROWS_AS(coefficients(zero, 1.0, ModeCutoff{-1, 4}), InvalidParameter);
  const GridFunction flat2(std::vector<Axis>{g.xy, g.xy});
  CHECK_THROWS_AS(coefficients(flat2, 1.0, ModeCutoff{4, 4}), InvalidParameter);
}

TEST_CASE("coefficients warn when f does not decay in t") {
  const Setup g = small_grid(1.0);
  const GridFunction f = GridFunction::sample3(g.xy, g.xy, g.t, [](double x, double y, double) {
    return Complex(std::exp(-(x * x + y * y)));
  });
  CHECK(coefficients(f, 1.0, ModeCutoff{2, 2}).accuracy_warning);
}

TEST_CASE("Parseval on random band-limited packets with cutoff (20, 20)") {
  std::mt19937_64 rng(17);
  for (double lambda2 : {1.0, -1.5}) {
    const Setup g{self_dual(65, lambda2), Axis::with_count(65, 0.55)};
    for (int k = 0; k < 2; ++k) {
      const GridFunction f = random_packet(rng, g);
      const auto c = coefficients(f, lambda2, ModeCutoff{20, 20});
      const double energy = f.norm() * f.norm();
      CHECK(std::abs(c.weighted_energy() - energy) <= 1e-4 * energy);
    }
  }
}

TEST_CASE("operator coefficients scale by nu") {
  const double lambda2 = 1.0;
  const Setup g{self_dual(65, lambda2), Axis::with_count(65, 0.55)};
  std::mt19937_64 rng(5);
  const GridFunction f = random_packet(rng, g);
  const ModeCutoff cutoff{10, 10};
  const auto c = coefficients(f, lambda2, cutoff);
  const auto lc = apply_operator_coefficients(f, lambda2, cutoff);
  double worst = 0.0;
  int counted = 0;
  for (std::size_t k = 0; k < c.lambda1.size(); ++k)
    for (int a = 0; a <= cutoff.max_plus; ++a)
      for (int b = 0; b <= cutoff.max_minus; ++b) {
        const Complex ck = c.values[k](a, b);
        if (std::abs(ck) <= 1e-6) continue;
        const double nu = eigenvalue(Lambda(c.lambda1[k], lambda2), ModeIndex(a, b));
        worst = std::max(worst, std::abs(lc.values[k](a, b) - nu * ck) / (nu * std::abs(ck)));
        ++counted;
      }
  CHECK(counted > 50);
  CHECK(worst < 1e-4);

  // Linearity.
  const GridFunction f2 = random_packet(rng, g);
  const auto sum = apply_operator_coefficients(f + Complex(0.0, 2.0) * f2, lambda2, cutoff);
  const auto l2c = apply_operator_coefficients(f2, lambda2, cutoff);
  double lin = 0.0;
  for (std::size_t k = 0; k < c.lambda1.size(); ++k)
    lin = std::max(lin, (sum.values[k] - lc.values[k] - Complex(0.0, 2.0) * l2c.values[k]).cwiseAbs().maxCoeff());
  CHECK(lin < 1e-10);
}

TEST_CASE("operator coefficients of an eigen-packet") {
  const double lambda2 = 1.0;
  const Setup g = small_grid(lambda2);
  const ModeIndex m(1, 0);
  const GridFunction f = eigen_packet(lambda2, m, g);
  const auto c = coefficients(f, lambda2, ModeCutoff{3, 3});
  const auto lc = apply_operator_coefficients(f, lambda2, ModeCutoff{3, 3});
  double worst = 0.0;
  for (std::size_t k = 0; k < c.lambda1.size(); ++k) {
    const Complex ck = c.at(k, m);
    if (std::abs(ck) < 1e-6) continue;
    const double nu = eigenvalue(Lambda(c.lambda1[k], lambda2), m);
    worst = std::max(worst, std::abs(lc.at(k, m) / ck - nu) / nu);
    CHECK(std::abs(ck - std::exp(-c.lambda1[k] * c.lambda1[k])) < 1e-8);
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("spectral projection: whole line, below the bottom, idempotence") {
  const double lambda2 = 1.0;
  const Setup g = small_grid(lambda2);
  std::mt19937_64 rng(9);
  const GridFunction f = random_packet(rng, g);
  const ModeCutoff cutoff{6, 6};

  const GridFunction all = spectral_projection(f, lambda2, Interval{0.0, 1e9}, cutoff);
  const double energy = coefficients(f, lambda2, cutoff).weighted_energy();
  const double fn2 = f.norm() * f.norm();
  // f - E(R) f is the part beyond the cutoff, orthogonal to E(R) f.
  CHECK(std::abs((f - all).norm() * (f - all).norm() - (fn2 - energy)) < 1e-6 * fn2);
  CHECK(std::abs(all.norm() * all.norm() - energy) < 1e-6 * fn2);

  const GridFunction below = spectral_projection(f, lambda2, Interval{0.0, 1.999}, cutoff);
  CHECK(below.norm() == 0.0);

  const Interval band{3.0, 7.5};
  const GridFunction once = spectral_projection(f, lambda2, band, cutoff);
  const GridFunction twice = spectral_projection(once, lambda2, band, cutoff);
  CHECK(once.norm() > 1e-3 * f.norm());
  CHECK((twice - once).norm() < 1e-6 * f.norm());
}

TEST_CASE("property: E(B1) E(B2) = E(B1 and B2) on nested and disjoint intervals") {
  const double lambda2 = 1.0;
  const Setup g = small_grid(lambda2);
  std::mt19937_64 rng(10);
  const GridFunction f = random_packet(rng, g);
  const ModeCutoff cutoff{6, 6};
  auto E = [&](Interval b, const GridFunction& h) { return spectral_projection(h, lambda2, b, cutoff); };

  const Interval outer{2.0, 9.0};
  const Interval inner{4.0, 6.0};
  CHECK((E(outer, E(inner, f)) - E(inner, f)).norm() < 1e-6 * f.norm());
  CHECK((E(inner, E(outer, f)) - E(inner, f)).norm() < 1e-6 * f.norm());

  const Interval left{2.0, 4.0};
  const Interval right{4.5, 8.0};
  CHECK(E(left, E(right, f)).norm() < 1e-6 * f.norm());

  // A union of two intervals is the sum of their projections.
  const std::vector<Interval> both{left, right};
  const GridFunction u = spectral_projection(f, lambda2, both, cutoff);
  CHECK((u - E(left, f) - E(right, f)).norm() < 1e-9 * f.norm());
}

TEST_CASE("property: self-adjointness of E(B)") {
  const double lambda2 = -1.0;
  const Setup g = small_grid(lambda2);
  std::mt19937_64 rng(11);
  const ModeCutoff cutoff{6, 6};
  for (int k = 0; k < 3; ++k) {
    const GridFunction f = random_packet(rng, g);
    const GridFunction h = random_packet(rng, g);
    const Interval b{2.5, 6.0 + k};
    const Complex lhs = spectral_projection(f, lambda2, b, cutoff).inner(h);
    const Complex rhs = f.inner(spectral_projection(h, lambda2, b, cutoff));
    CHECK(std::abs(lhs - rhs) < 1e-6 * f.norm() * h.norm());
  }
}

TEST_CASE("closed interval endpoints are included") {
  // At l1 = 0, l2 = 1 the eigenvalues are the even integers 2, 4, ...
  const double lambda2 = 1.0;
  const Setup g = small_grid(lambda2);
  const GridFunction f = eigen_packet(lambda2, ModeIndex(0, 0), g);
  const auto c = coefficients(f, lambda2, ModeCutoff{2, 2});
  const GridFunction p = spectral_projection(f, lambda2, Interval{2.0, 2.0}, ModeCutoff{2, 2});
  // Only the l1 = 0 slice sits exactly on nu = 2.
  const auto cp = coefficients(p, lambda2, ModeCutoff{2, 2});
  for (std::size_t k = 0; k < c.lambda1.size(); ++k) {
    if (c.lambda1[k] == 0.0)
      CHECK(std::abs(cp.at(k, ModeIndex(0, 0)) - c.at(k, ModeIndex(0, 0))) < 1e-8);
    else
      CHECK(std::abs(cp.at(k, ModeIndex(0, 0))) < 1e-8);
  }
}

TEST_CASE("spectrum bottom") {
  CHECK(spectrum_bottom(1.0) == 2.0);
  CHECK(spectrum_bottom(-3.0) == 6.0);
  CHECK_THROWS_AS(spectrum_bottom(0.0), InvalidParameter);
  // nu_{(l1, 1), (0, 0)} grows with |l1| and reaches the bottom at l1 = 0.
  double prev = INFINITY;
  for (double l1 : {1.0, 0.1, 1e-2, 1e-4, 1e-8}) {
    const double nu = eigenvalue(Lambda(l1, 1.0), ModeIndex(0, 0));
    CHECK(nu >= 2.0);
    CHECK(nu < prev);
    CHECK(eigenvalue(Lambda(-l1, 1.0), ModeIndex(0, 0)) == nu);
    prev = nu;
  }
  CHECK(prev - 2.0 < 1e-7);
  double best = INFINITY;
  for (int k = -80; k <= 80; ++k) best = std::min(best, eigenvalue(Lambda(0.05 * k, 1.0), ModeIndex(0, 0)));
  CHECK(std::abs(best - spectrum_bottom(1.0)) < 1e-10);
}

TEST_CASE("property: the sampled spectrum fills [2|l2|, upper] under refinement") {
  const double upper = 12.0;
  double prev = INFINITY;
  for (auto [step, modes] : {std::pair{1.0, 4}, {0.25, 8}, {0.05, 16}, {0.01, 32}}) {
    std::vector<double> grid;
    for (double l1 = -6.0; l1 <= 6.0 + 1e-12; l1 += step) grid.push_back(l1);
    const double gap = max_spectral_gap(1.0, grid, ModeCutoff{modes, modes}, upper);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 0.05);
  // Without l1 variation the spectrum is discrete: gaps stay at 2.
  const std::vector<double> zero{0.0};
  CHECK(max_spectral_gap(1.0, zero, ModeCutoff{30, 30}, upper) == doctest::Approx(2.0));
}
