#pragma once

#include <Eigen/Core>

namespace hosc {

/// Representation parameter (lambda1, lambda2) with lambda2 != 0.
class Lambda {
 public:
  /// Throws InvalidParameter when lambda2 == 0 or either value is not finite.
  Lambda(double lambda1, double lambda2);

  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }

 private:
  double lambda1_;
  double lambda2_;
};

/// Potential matrix M of the representation, its eigenvalues
/// mu_plus >= mu_minus > 0 and an orthogonal `rotation` whose columns are the
/// matching unit eigenvectors (first nonzero entry of each column positive).
struct QuadFormDiag {
  Eigen::Matrix2d m_matrix;
  double mu_plus;
  double mu_minus;
  Eigen::Matrix2d rotation;
};

/// [[l1^2 + l2^2, -l1 l2], [-l1 l2, l2^2]], so that
/// (l1 u1 - l2 u2)^2 + (l2 u1)^2 = u^T M u.
Eigen::Matrix2d potential_matrix(const Lambda& lambda);

/// mu_{eps} = (l1^2 + 2 l2^2 + eps |l1| sqrt(l1^2 + 4 l2^2)) / 2. mu_minus is
/// evaluated as l2^4 / mu_plus, which is the same number without the
/// cancellation of the difference form.
QuadFormDiag diagonalize(const Lambda& lambda);

/// Principal-axis coordinates u' = rotation^T u, so that
/// u^T M u = mu_plus u'_1^2 + mu_minus u'_2^2 and |u'| = |u|.
Eigen::Vector2d to_principal_axes(const QuadFormDiag& diag, const Eigen::Vector2d& u);

/// The closed-form eigenvector matrix with columns
/// (l1 l2, (l1^2 -+ |l1| s) / 2) / norm, s = sqrt(l1^2 + 4 l2^2).
/// Undefined (InvalidParameter) for l1 == 0, where both columns vanish.
Eigen::Matrix2d explicit_eigenvector_matrix(const Lambda& lambda);

}  // namespace hosc
