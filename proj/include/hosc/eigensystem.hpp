#pragma once

#include <Eigen/Core>

#include <vector>

#include "hosc/grid.hpp"
#include "hosc/quadform.hpp"

namespace hosc {

/// Oscillator quantum numbers m = (m_plus, m_minus), each in [0, 200].
struct ModeIndex {
  int m_plus = 0;
  int m_minus = 0;

  ModeIndex() = default;
  /// Throws InvalidParameter outside [0, 200].
  ModeIndex(int plus, int minus);

  auto operator<=>(const ModeIndex&) const = default;
};

struct EigenPair {
  Lambda lambda;
  ModeIndex mode;
  double eigenvalue;
};

/// nu = sqrt(mu_plus) (2 m_plus + 1) + sqrt(mu_minus) (2 m_minus + 1).
double eigenvalue(const Lambda& lambda, ModeIndex mode);

/// The `count` smallest eigenvalues in ascending order, with multiplicity.
/// Exactly equal eigenvalues are ordered lexicographically by mode.
std::vector<EigenPair> enumerate_spectrum(const Lambda& lambda, int count);

/// Unit-norm eigenfunction
///   |l2|^{1/2} hh_{m+}(mu_plus^{1/4} u'_1) hh_{m-}(mu_minus^{1/4} u'_2)
/// with hh the normalized Hermite functions and u' the principal-axis
/// coordinates of u.
double eigenfunction(const Lambda& lambda, ModeIndex mode, const Eigen::Vector2d& u);

/// The same eigenfunction sampled on a 2D grid.
GridFunction eigenfunction_grid(const Lambda& lambda, ModeIndex mode, const Axis& u1, const Axis& u2);

/// Largest m such that hh_m(a x) is resolved on `axis`: its classical region
/// plus a decay margin fits inside the half width, and its band limit stays
/// below the grid Nyquist frequency.
int resolved_mode_limit(double scale, const Axis& axis);

/// All eigenfunctions with m_plus <= max_plus and m_minus <= max_minus,
/// tabulated on a 2D grid for fast projection and synthesis.
class ModeTable {
 public:
  ModeTable(const Lambda& lambda, const Axis& u1, const Axis& u2, int max_plus, int max_minus);

  int max_plus() const noexcept { return max_plus_; }
  int max_minus() const noexcept { return max_minus_; }
  const Axis& axis(int k) const { return k == 0 ? u1_ : u2_; }

  /// Coefficients c(m+, m-) = <f, h_m> (grid inner product).
  Eigen::MatrixXcd project(const GridFunction& f) const;
  /// sum over the box of c(m+, m-) h_m.
  GridFunction synthesize(const Eigen::MatrixXcd& coefficients) const;
  /// Grid samples of one tabulated eigenfunction.
  GridFunction mode(ModeIndex m) const;

 private:
  Axis u1_;
  Axis u2_;
  int max_plus_;
  int max_minus_;
  double prefactor_;
  Eigen::MatrixXd plus_;   // points x (max_plus + 1)
  Eigen::MatrixXd minus_;  // points x (max_minus + 1)
};

}  // namespace hosc
