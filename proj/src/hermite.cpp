#include "hosc/hermite.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hosc/errors.hpp"

namespace hosc::hermite {
namespace {

void check_degree(int m) {
  if (m < 0) throw InvalidParameter("Hermite degree must be non-negative");
  if (m > kMaxDegree) {
    std::ostringstream msg;
    msg << "Hermite degree " << m << " exceeds the supported maximum " << kMaxDegree;
    throw UnsupportedDegree(msg.str());
  }
}

// log of sqrt(2^m m! sqrt(pi)), the norm of the raw Hermite function h_m.
double log_norm(int m) {
  return 0.5 * (m * std::numbers::ln2 + std::lgamma(m + 1.0) + 0.5 * std::log(std::numbers::pi));
}

// Normalized recurrence
//   hh_{k+1} = sqrt(2/(k+1)) x hh_k - sqrt(k/(k+1)) hh_{k-1}
// run on the polynomial part with the Gaussian factor kept as a log scale,
// so neither the factor nor the polynomial growth can under/overflow early.
double scaled_value(int m, double x, double extra_log_scale) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  double log_scale = -0.5 * x * x + extra_log_scale;
  for (int k = 0; k < m; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > 1e100) {
      prev /= mag;
      cur /= mag;
      log_scale += std::log(mag);
    }
  }
  if (cur == 0.0) return 0.0;
  if (log_scale == 0.0) return cur;
  return std::copysign(std::exp(std::log(std::abs(cur)) + log_scale), cur);
}

}  // namespace

double polynomial(int m, double x) {
  check_degree(m);
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < m; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double function(int m, double x, bool normalized) {
  check_degree(m);
  return scaled_value(m, x, normalized ? 0.0 : log_norm(m));
}

void normalized_table(int max_degree, double x, std::span<double> out) {
  check_degree(max_degree);
  if (out.size() < static_cast<std::size_t>(max_degree + 1))
    throw InvalidParameter("Hermite table output too small");
  out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (max_degree == 0) return;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (int k = 1; k < max_degree; ++k)
    out[k + 1] = std::sqrt(2.0 / (k + 1)) * x * out[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
}

std::vector<QuadratureNode> gauss_nodes(int n) {
  if (n < 1 || n > kMaxDegree)
    throw InvalidParameter("Gauss-Hermite order must lie in [1, 200]");

  // Golub-Welsch starting values, polished by Newton on the orthonormal
  // polynomials p_n (same roots as H_n, p_n' = sqrt(2n) p_{n-1}).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InternalError("Gauss-Hermite tridiagonal eigensolve failed");

  const double p0 = std::pow(std::numbers::pi, -0.25);
  auto evaluate = [&](double x, double& pn, double& pn1) {
    double prev = 0.0;
    double cur = p0;
    for (int k = 0; k < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    pn = cur;
    pn1 = prev;
  };

  std::vector<QuadratureNode> rule(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    double pn = 0.0;
    double pn1 = 0.0;
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
      evaluate(x, pn, pn1);
      const double dx = pn / (std::sqrt(2.0 * n) * pn1);
      x -= dx;
      if (std::abs(dx) <= 4e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged || !std::isfinite(x)) {
      std::ostringstream msg;
      msg << "Gauss-Hermite Newton iteration did not converge for node " << i << " of " << n
          << " (last iterate " << x << ", residual " << pn << ")";
      throw InternalError(msg.str());
    }
    evaluate(x, pn, pn1);
    rule[i] = {x, 1.0 / (n * pn1 * pn1)};
  }
  // Exact symmetry of the rule.
  for (int i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (rule[n - 1 - i].node - rule[i].node);
    const double w = 0.5 * (rule[n - 1 - i].weight + rule[i].weight);
    rule[i] = {-x, w};
    rule[n - 1 - i] = {x, w};
  }
  if (n % 2 == 1) rule[n / 2].node = 0.0;
  return rule;
}

}  // namespace hosc::hermite
