#include "hosc/verify.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hosc/eigensystem.hpp"
#include "hosc/errors.hpp"
#include "hosc/group.hpp"
#include "hosc/hermite.hpp"
#include "hosc/kernels.hpp"
#include "hosc/oracle.hpp"
#include "hosc/quadform.hpp"
#include "hosc/spectral.hpp"
#include "hosc/transforms.hpp"

namespace hosc::verify {

Check upper_bound(std::string name, double measured, double tolerance) {
  return Check{std::move(name), measured <= tolerance, measured, tolerance};
}

namespace {

using std::numbers::pi;

Check lower_bound(std::string name, double measured, double threshold) {
  return Check{std::move(name), measured > threshold, measured, threshold};
}

double relative_error(const GridFunction& a, const GridFunction& b) {
  return (a - b).norm() / b.norm();
}

// Odd axis whose spacing is its own dual under exp(-i l2 y z).
Axis self_dual_axis(int count, double lambda2) {
  return Axis::with_count(count, std::sqrt(2.0 * pi / (std::abs(lambda2) * count)));
}

std::vector<Check> hermite_suite() {
  std::vector<Check> out;
  constexpr int kMax = 30;
  const auto rule = hermite::gauss_nodes(40);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(kMax + 1, kMax + 1);
  std::vector<double> row(kMax + 1);
  for (const auto& q : rule) {
    hermite::normalized_table(kMax, q.node, row);
    const double w = q.weight * std::exp(q.node * q.node);
    for (int i = 0; i <= kMax; ++i)
      for (int j = 0; j <= kMax; ++j) gram(i, j) += w * row[i] * row[j];
  }
  out.push_back(upper_bound("orthonormality_m_le_30",
                            (gram - Eigen::MatrixXd::Identity(kMax + 1, kMax + 1)).cwiseAbs().maxCoeff(), 1e-10));

  // Fourth-order central difference for the second derivative.
  const double h = 1e-3;
  double ode = 0.0;
  for (int m = 0; m <= 15; ++m)
    for (double x = -5.0; x <= 5.0 + 1e-12; x += 0.25) {
      auto f = [m](double s) { return hermite::function(m, s); };
      const double d2 = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
      ode = std::max(ode, std::abs(-d2 + x * x * f(x) - (2 * m + 1) * f(x)));
    }
  out.push_back(upper_bound("ode_residual_m_le_15", ode, 1e-6));

  double parity = 0.0;
  for (int m = 0; m <= 40; ++m)
    for (double x = 0.0; x <= 10.0; x += 0.37) {
      const double sign = m % 2 == 0 ? 1.0 : -1.0;
      parity = std::max(parity, std::abs(hermite::function(m, -x) - sign * hermite::function(m, x)));
    }
  out.push_back(upper_bound("parity", parity, 1e-15));

  double moment = 0.0;
  for (const auto& q : hermite::gauss_nodes(20)) moment += q.weight * std::pow(q.node, 38);
  const double exact = std::tgamma(19.5);
  out.push_back(upper_bound("gauss_hermite_moment_38", std::abs(moment - exact) / exact, 1e-12));
  return out;
}

std::vector<Check> quadform_suite(const Lambda& lambda) {
  std::vector<Check> out;
  const QuadFormDiag d = diagonalize(lambda);
  const double l1 = lambda.lambda1();
  const double l2 = lambda.lambda2();
  const double scale = l1 * l1 + 2 * l2 * l2;
  out.push_back(upper_bound("trace_identity", std::abs(d.mu_plus + d.mu_minus - scale) / scale, 1e-13));
  const double det = std::pow(l2, 4);
  out.push_back(upper_bound("determinant_identity", std::abs(d.mu_plus * d.mu_minus - det) / det, 1e-13));
  out.push_back(upper_bound(
      "rotation_orthogonal", (d.rotation.transpose() * d.rotation - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(),
      1e-14));
  const Eigen::Matrix2d diag = Eigen::Vector2d(d.mu_plus, d.mu_minus).asDiagonal();
  out.push_back(upper_bound("rotation_diagonalizes",
                            (d.rotation.transpose() * d.m_matrix * d.rotation - diag).cwiseAbs().maxCoeff() / scale,
                            1e-12));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(d.m_matrix);
  const double generic = std::max(std::abs(es.eigenvalues()[1] - d.mu_plus), std::abs(es.eigenvalues()[0] - d.mu_minus));
  out.push_back(upper_bound("closed_form_vs_eigensolver", generic / scale, 1e-13));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  double form = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Eigen::Vector2d u(unif(rng), unif(rng));
    const Eigen::Vector2d p = to_principal_axes(d, u);
    const double lhs = u.dot(d.m_matrix * u);
    const double rhs = d.mu_plus * p[0] * p[0] + d.mu_minus * p[1] * p[1];
    form = std::max(form, std::abs(lhs - rhs) / std::max(lhs, 1e-300));
  }
  out.push_back(upper_bound("quadratic_form_preserved", form, 1e-12));
  return out;
}

std::vector<Check> eigenresidual_suite(const Lambda& lambda) {
  std::vector<Check> out;
  constexpr int kMax = 5;
  const QuadFormDiag d = diagonalize(lambda);
  const double s_min = std::pow(d.mu_minus, 0.25);
  const double s_max = std::pow(d.mu_plus, 0.25);
  const double reach = std::sqrt(2.0 * kMax + 1) + 7.0;
  const double spacing = pi / (s_max * reach);
  const int half = static_cast<int>(std::ceil(reach / s_min / spacing));
  const Axis axis = Axis::with_count(2 * half + 1, spacing);

  double worst = 0.0;
  for (int a = 0; a <= kMax; ++a)
    for (int b = 0; b <= kMax; ++b) {
      const ModeIndex m(a, b);
      const GridFunction h = eigenfunction_grid(lambda, m, axis, axis);
      GridFunction expected = h;
      expected *= eigenvalue(lambda, m);
      worst = std::max(worst, relative_error(group::sublaplacian_pi(lambda, h), expected));
    }
  out.push_back(upper_bound("eigen_residual_m_le_5", worst, 1e-6));

  const ModeTable table(lambda, axis, axis, kMax, kMax);
  const int n = (kMax + 1) * (kMax + 1);
  Eigen::MatrixXcd gram(n, n);
  std::vector<GridFunction> modes;
  for (int a = 0; a <= kMax; ++a)
    for (int b = 0; b <= kMax; ++b) modes.push_back(table.mode(ModeIndex(a, b)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = modes[i].inner(modes[j]);
  out.push_back(upper_bound("gram_identity", (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-6));
  return out;
}

std::vector<Check> intertwiner_suite(const Lambda& lambda) {
  std::vector<Check> out;
  const Axis x = self_dual_axis(161, lambda.lambda2());
  const Axis z = x;
  const GridFunction h = GridFunction::sample2(x, z, [](double u1, double u2) {
    return Complex(1.0 + 0.5 * u1, 0.3 * u2) * std::exp(-0.5 * (u1 - 0.4) * (u1 - 0.4) - 0.4 * u2 * u2);
  });
  const GridFunction th = transforms::intertwiner_T(lambda, h);
  out.push_back(upper_bound("T_unitary", std::abs(th.norm() - h.norm()) / h.norm(), 1e-10));
  out.push_back(upper_bound("T_roundtrip", relative_error(transforms::intertwiner_T_inverse(lambda, th), h), 1e-10));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    group::NElement n;
    for (double& c : n.v) c = unif(rng);
    for (double& c : n.z) c = unif(rng);
    const GridFunction lhs = transforms::intertwiner_T(lambda, group::rep_pi(lambda, n, h));
    const GridFunction rhs = group::rep_rho(lambda, n, th);
    worst = std::max(worst, (lhs - rhs).norm() / h.norm());
  }
  out.push_back(upper_bound("T_pi_equals_rho_T", worst, 1e-6));

  double transport = 0.0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const ModeIndex m(a, b);
      const GridFunction t = transforms::intertwiner_T(lambda, eigenfunction_grid(lambda, m, x, z));
      GridFunction expected = t;
      expected *= eigenvalue(lambda, m);
      transport = std::max(transport, relative_error(group::sublaplacian(lambda, group::Rep::rho, t), expected));
    }
  out.push_back(upper_bound("eigen_transport_m_le_3", transport, 1e-5));
  return out;
}

std::vector<Check> mehler_suite(const Lambda& lambda) {
  std::vector<Check> out;
  const auto residuals = kernels::scaling_residuals();
  const kernels::MehlerScaling chosen = kernels::select_scaling();
  for (const auto& r : residuals) {
    if (r.scaling == chosen)
      out.push_back(upper_bound("selected_scaling_residual", r.residual, 1e-6));
    else
      out.push_back(lower_bound("rejected_scaling_residual", r.residual, 1e-2));
  }
  out.push_back(upper_bound("dilation_is_default", chosen == kernels::MehlerScaling::dilation ? 0.0 : 1.0, 0.0));

  const QuadFormDiag d = diagonalize(lambda);
  double series = 0.0;
  for (double mu : {d.mu_plus, d.mu_minus})
    for (double t : {0.5, 1.0, 2.0}) {
      const kernels::MehlerParams p(t, mu);
      double peak = 0.0;
      double err = 0.0;
      for (double x = -3.0; x <= 3.0; x += 0.5)
        for (double y = -3.0; y <= 3.0; y += 0.5) {
          const double s = kernels::mehler_series(p, x, y, 60);
          peak = std::max(peak, std::abs(s));
          err = std::max(err, std::abs(kernels::mehler_k(p, x, y) - s));
        }
      series = std::max(series, err / peak);
    }
  out.push_back(upper_bound("kernel_vs_eigen_series", series, 1e-8));

  double limit = 0.0;
  for (double x = -2.0; x <= 2.0; x += 0.5)
    for (double y = -2.0; y <= 2.0; y += 0.5)
      limit = std::max(limit, std::abs(kernels::mehler_q(20.0, x, y) - std::exp(-0.5 * (x * x + y * y)) / std::sqrt(pi)));
  out.push_back(upper_bound("large_time_limit", limit, 1e-12));

  const Axis axis = Axis::from_extent(10.0, 0.25);
  const GridFunction f = GridFunction::sample2(axis, axis, [](double u1, double u2) {
    return Complex(std::exp(-0.5 * ((u1 - 0.5) * (u1 - 0.5) + u2 * u2)), 0.2 * u1 * std::exp(-0.5 * (u1 * u1 + u2 * u2)));
  });
  double agree = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const auto e = kernels::heat_apply(lambda, t, f, kernels::HeatMethod::eigen_expansion);
    const auto k = kernels::heat_apply(lambda, t, f, kernels::HeatMethod::kernel);
    agree = std::max(agree, relative_error(k.value, e.value));
  }
  out.push_back(upper_bound("heat_methods_agree", agree, 1e-6));
  return out;
}

std::vector<Check> fd_suite(const Lambda& lambda) {
  std::vector<Check> out;
  const std::array<int, 2> res{128, 256};
  const auto cmp = oracle::fd_compare(lambda, 6, res);
  out.push_back(upper_bound("nu_0_0_vs_fd", cmp.entries.front().deviation, 1e-3));
  for (const auto& e : cmp.entries)
    if (e.index > 0) out.push_back(upper_bound("eigenvalue_" + std::to_string(e.index) + "_vs_fd", e.deviation, 1e-3));
  out.push_back(upper_bound("cluster_mean_deviation", cmp.max_cluster_deviation, 1e-3));
  return out;
}

std::vector<Check> spectralres_suite(double lambda2) {
  std::vector<Check> out;
  const Axis xy = self_dual_axis(65, lambda2);
  const Axis t = Axis::with_count(65, 0.55);
  const GridFunction f = GridFunction::sample3(xy, xy, t, [](double x, double y, double s) {
    return Complex(1.0 + 0.3 * x, 0.2 * y) * std::exp(-0.5 * (x * x + y * y) - s * s / 8.0);
  });
  const spectral::ModeCutoff cutoff{12, 12};
  const auto c = spectral::coefficients(f, lambda2, cutoff);
  const auto lc = spectral::apply_operator_coefficients(f, lambda2, cutoff);
  double worst = 0.0;
  for (std::size_t k = 0; k < c.lambda1.size(); ++k) {
    const Lambda lambda(c.lambda1[k], lambda2);
    for (int a = 0; a <= cutoff.max_plus; ++a)
      for (int b = 0; b <= cutoff.max_minus; ++b) {
        const Complex ck = c.values[k](a, b);
        if (std::abs(ck) <= 1e-6) continue;
        const double nu = eigenvalue(lambda, ModeIndex(a, b));
        worst = std::max(worst, std::abs(lc.values[k](a, b) - nu * ck) / (nu * std::abs(ck)));
      }
  }
  out.push_back(upper_bound("operator_coefficients_scale_by_nu", worst, 1e-4));
  const double energy = f.norm() * f.norm();
  out.push_back(upper_bound("parseval", std::abs(c.weighted_energy() - energy) / energy, 1e-4));
  out.push_back(upper_bound("spectrum_bottom",
                            std::abs(eigenvalue(Lambda(0.0, lambda2), ModeIndex(0, 0)) - spectral::spectrum_bottom(lambda2)),
                            1e-12));
  return out;
}

}  // namespace

std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& options) {
  if (suite == "hermite") return hermite_suite();
  if (suite == "spectralres") return spectralres_suite(options.lambda2);
  const Lambda lambda(options.lambda1, options.lambda2);
  if (suite == "quadform") return quadform_suite(lambda);
  if (suite == "eigenresidual") return eigenresidual_suite(lambda);
  if (suite == "intertwiner") return intertwiner_suite(lambda);
  if (suite == "mehler") return mehler_suite(lambda);
  if (suite == "fd") return fd_suite(lambda);
  throw InvalidParameter("unknown verification suite '" + std::string(suite) + "'");
}

}  // namespace hosc::verify
