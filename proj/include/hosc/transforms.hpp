#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "hosc/grid.hpp"
#include "hosc/quadform.hpp"

namespace hosc::transforms {

/// Fourier transform in the central variable,
///   F_{l1} f(x, y) = int exp(-i l1 t) f(x, y, t) dt,
/// sampled at a list of l1 values.
struct CentralFourier {
  std::vector<double> lambda1;
  std::vector<GridFunction> slices;
  /// True when `lambda1` are the centered FFT frequencies of `t_axis`.
  bool canonical = false;
  Axis t_axis;
  /// max |f| on the two t faces relative to max |f|.
  double boundary_ratio = 0.0;
  /// Set when boundary_ratio exceeds 1e-8: the truncated integral is then
  /// not an accurate transform.
  bool decay_warning = false;

  /// Trapezoidal Plancherel weight d(l1) / (2 pi) of the canonical samples.
  double measure_weight() const noexcept { return t_axis.frequency_spacing() / (2.0 * std::numbers::pi); }
};

/// Canonical samples: one FFT pass over the t axis (axis 2).
CentralFourier partial_fourier_central(const GridFunction& f);
/// Arbitrary samples by direct trapezoidal sums.
CentralFourier partial_fourier_central(const GridFunction& f, std::span<const double> lambda1_samples);

/// Inverse of the canonical transform, back on (x, y, t).
GridFunction inverse_partial_fourier_central(const CentralFourier& transform);

/// Axis with the same point count and spacing 2 pi / (|l2| * count * spacing):
/// the grid onto which exp(-i l2 y z) maps `axis` unitarily.
Axis dual_axis(const Axis& axis, double lambda2);

/// T h(x, y) = sqrt(|l2| / 2 pi) exp(i l1 x y / 2) int exp(-i l2 y z) h(x, z) dz.
/// The output y axis is dual_axis(z axis); a different `target_y` raises
/// ResamplingError.
GridFunction intertwiner_T(const Lambda& lambda, const GridFunction& h,
                           std::optional<Axis> target_y = std::nullopt);

/// T^{-1} f(x, z) = sqrt(|l2| / 2 pi) int exp(i l2 z y) exp(-i l1 x y / 2) f(x, y) dy.
GridFunction intertwiner_T_inverse(const Lambda& lambda, const GridFunction& f,
                                   std::optional<Axis> target_z = std::nullopt);

}  // namespace hosc::transforms
