#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

#include "hosc/grid.hpp"
#include "hosc/quadform.hpp"

namespace hosc::kernels {

/// Closed-form kernels are refused below this time.
inline constexpr double kMinTime = 1e-8;

/// Time and potential strength of the 1D oscillator -d^2/dx^2 + mu x^2.
struct MehlerParams {
  double t;
  double mu;
  /// Throws InvalidParameter unless t > 0 and mu > 0.
  MehlerParams(double t, double mu);
};

/// How K_{t,mu} is obtained from Q by rescaling.
///  - dilation: mu^{1/4} exp(-t sqrt(mu)) Q_{t sqrt(mu)}(mu^{1/4} x, mu^{1/4} y),
///    the kernel of exp(-t(-d^2 + mu x^2)).
///  - literal:  sqrt(mu) exp(-t mu) Q_{t mu}(sqrt(mu) x, sqrt(mu) y), which is
///    the kernel for the potential mu^2 x^2 instead.
/// `dilation` is the default; scaling_residuals() reproduces the comparison
/// that selects it.
enum class MehlerScaling { dilation, literal };

/// Q_t(x, y) = pi^{-1/2} (1 - e^{-4t})^{-1/2} exp(-F_t(x, y)),
/// F_t = ((1 + e^{-4t})(x^2 + y^2) / 2 - 2 e^{-2t} x y) / (1 - e^{-4t}):
/// the kernel of exp(-t(-d^2 + x^2 - 1)). NearDeltaError for t < kMinTime.
double mehler_q(double t, double x, double y);

double mehler_k(const MehlerParams& params, double x, double y,
                MehlerScaling scaling = MehlerScaling::dilation);

/// sum_{m < terms} exp(-t sqrt(mu)(2m + 1)) hh_m(mu^{1/4} x) hh_m(mu^{1/4} y) mu^{1/4}:
/// the eigen-expansion of the same heat kernel.
double mehler_series(const MehlerParams& params, double x, double y, int terms);

struct ScalingResidual {
  MehlerScaling scaling;
  /// Max over the probe set of |K - series| / max |series|.
  double residual;
};

/// Compares both scalings with the 60-term eigen-series for mu in
/// {0.25, (3 - sqrt 5)/2, 2, (3 + sqrt 5)/2}, t in {0.5, 1, 2} on a probe grid.
std::vector<ScalingResidual> scaling_residuals();

/// The unique scaling whose residual is below 1e-6; InternalError otherwise.
MehlerScaling select_scaling();

/// Kernel of exp(-t d pi_lambda(L)) in the original coordinates:
/// K_{t, mu+}(u'_1, v'_1) K_{t, mu-}(u'_2, v'_2) with primes the principal axes.
double kernel_kappa(const Lambda& lambda, double t, const Eigen::Vector2d& u, const Eigen::Vector2d& v);

struct QuadratureOptions {
  /// Half width of the (y1, y2) quadrature square; 0 picks it from the
  /// Gaussian decay of kappa.
  double half_width = 0.0;
  /// Points per axis (odd); 0 picks it from the decay and oscillation rates.
  int points = 0;
};

struct KernelValue {
  Complex value;
  /// Integrand magnitude on the quadrature boundary relative to its maximum.
  double boundary_ratio;
  /// boundary_ratio above 1e-12.
  bool accuracy_warning;
};

/// Kernel of exp(-t d rho_lambda(L)) at p = (xo, yo), q = (x, y):
///   |l2|/(2 pi) exp(i l1 (xo yo - x y) / 2)
///     int int exp(i l2 (y2 y - yo y1)) kappa((xo, y1), (x, y2)) dy1 dy2,
/// by direct trapezoidal quadrature.
KernelValue kernel_q_rho(const Lambda& lambda, double t, const Eigen::Vector2d& p,
                         const Eigen::Vector2d& q, QuadratureOptions options = {});

/// Integral operator with kernel kappa on a 2D grid.
GridFunction kappa_apply(const Lambda& lambda, double t, const GridFunction& f);
/// Same operator applied to several functions on one grid; the kernel is
/// evaluated once per output point.
std::vector<GridFunction> kappa_apply(const Lambda& lambda, double t, std::span<const GridFunction> fs);

/// Integral operator with kernel Q_{t, lambda} on a 2D grid. For each pair of
/// x coordinates the (yo, y) block of the kernel is one 2D FFT of kappa
/// sampled on the dual y axis.
GridFunction q_rho_apply(const Lambda& lambda, double t, const GridFunction& f);

enum class HeatMethod { eigen_expansion, kernel };

struct HeatOptions {
  /// Allowed tail bound relative to ||f|| (eigen_expansion only).
  double tolerance = 1e-9;
};

struct HeatResult {
  GridFunction value;
  /// Upper bound on the L2 norm of the discarded modes' contribution
  /// (eigen_expansion); 0 for the kernel method.
  double tail_bound = 0.0;
  int max_plus = 0;
  int max_minus = 0;
};

/// exp(-t d pi_lambda(L)) f. The eigen-expansion keeps every mode resolved by
/// the grid and raises TruncationError when
///   exp(-t nu_min(excluded)) * ||f - projection(f)||
/// exceeds tolerance * ||f||. The kernel method refuses t < kMinTime.
HeatResult heat_apply(const Lambda& lambda, double t, const GridFunction& f, HeatMethod method,
                      HeatOptions options = {});

}  // namespace hosc::kernels
