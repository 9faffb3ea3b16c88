#include "hosc/quadform.hpp"

#include <cmath>

#include "hosc/errors.hpp"

namespace hosc {

Lambda::Lambda(double lambda1, double lambda2) : lambda1_(lambda1), lambda2_(lambda2) {
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2))
    throw InvalidParameter("lambda components must be finite");
  if (lambda2 == 0.0) throw InvalidParameter("lambda2 must be nonzero");
}

Eigen::Matrix2d potential_matrix(const Lambda& lambda) {
  const double a = lambda.lambda1();
  const double b = lambda.lambda2();
  Eigen::Matrix2d m;
  m << a * a + b * b, -a * b, -a * b, b * b;
  return m;
}

QuadFormDiag diagonalize(const Lambda& lambda) {
  const double a = lambda.lambda1();
  const double b = lambda.lambda2();
  QuadFormDiag d;
  d.m_matrix = potential_matrix(lambda);
  const double root = std::abs(a) * std::sqrt(a * a + 4.0 * b * b);
  d.mu_plus = 0.5 * (a * a + 2.0 * b * b + root);
  d.mu_minus = (b * b) * (b * b) / d.mu_plus;

  if (a == 0.0) {
    d.rotation.setIdentity();
    return d;
  }
  // (mu_plus - l2^2, -l1 l2) solves the first-row eigen equation; its first
  // entry (l1^2 + |l1| sqrt(..)) / 2 is positive without cancellation.
  Eigen::Vector2d plus(0.5 * (a * a + root), -a * b);
  plus.normalize();
  Eigen::Vector2d minus(-plus.y(), plus.x());
  if (minus.x() < 0.0 || (minus.x() == 0.0 && minus.y() < 0.0)) minus = -minus;
  d.rotation.col(0) = plus;
  d.rotation.col(1) = minus;
  return d;
}

Eigen::Vector2d to_principal_axes(const QuadFormDiag& diag, const Eigen::Vector2d& u) {
  return diag.rotation.transpose() * u;
}

Eigen::Matrix2d explicit_eigenvector_matrix(const Lambda& lambda) {
  const double a = lambda.lambda1();
  const double b = lambda.lambda2();
  if (a == 0.0) throw InvalidParameter("closed-form eigenvectors are undefined for lambda1 = 0");
  const double s = std::abs(a) * std::sqrt(a * a + 4.0 * b * b);
  const double lo = 0.5 * (a * a - s);
  const double hi = 0.5 * (a * a + s);
  const double n_lo = std::sqrt(a * b * a * b + lo * lo);
  const double n_hi = std::sqrt(a * b * a * b + hi * hi);
  Eigen::Matrix2d k;
  k << a * b / n_lo, a * b / n_hi, lo / n_lo, hi / n_hi;
  return k;
}

}  // namespace hosc
