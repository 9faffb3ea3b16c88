#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

#include "hosc/eigensystem.hpp"
#include "hosc/grid.hpp"

namespace hosc::spectral {

/// Modes with m_plus <= max_plus and m_minus <= max_minus.
struct ModeCutoff {
  int max_plus = 20;
  int max_minus = 20;
};

/// c_{lambda, m}(f) = (F_{l1} f, T h_{lambda, m}) for each sampled l1.
struct SpectralCoefficients {
  double lambda2 = 1.0;
  std::vector<double> lambda1;
  /// d(l1) / (2 pi) for canonical samples, 0 for a user-supplied list.
  double measure_weight = 0.0;
  ModeCutoff cutoff;
  /// One (max_plus + 1) x (max_minus + 1) matrix per l1 sample.
  std::vector<Eigen::MatrixXcd> values;
  /// The input did not decay at the t boundary.
  bool accuracy_warning = false;

  Complex at(std::size_t lambda1_index, ModeIndex m) const;
  /// sum |c|^2 * measure_weight: the Plancherel energy captured by the cutoff.
  double weighted_energy() const;
};

/// Coefficients at the FFT frequencies of the t axis. f lives on (x, y, t).
SpectralCoefficients coefficients(const GridFunction& f, double lambda2, ModeCutoff cutoff);
/// Coefficients at arbitrary l1 samples.
SpectralCoefficients coefficients(const GridFunction& f, double lambda2, std::span<const double> lambda1_samples,
                                  ModeCutoff cutoff);

/// (L + l2^2 (x^2 + y^2)) f with L = -(X^2 + Y^2), X = d_x - (y/2) d_t,
/// Y = d_y + (x/2) d_t, by spectral differentiation.
GridFunction heisenberg_oscillator(const GridFunction& f, double lambda2);

/// coefficients(heisenberg_oscillator(f)); equals nu_{lambda, m} c_{lambda, m}(f).
SpectralCoefficients apply_operator_coefficients(const GridFunction& f, double lambda2, ModeCutoff cutoff);

/// Closed interval [lo, hi].
struct Interval {
  double lo;
  double hi;
  bool contains(double v) const noexcept { return v >= lo && v <= hi; }
};

/// E(B) f for B a finite union of closed intervals, reconstructed on the
/// grid of f from the modes inside the cutoff.
GridFunction spectral_projection(const GridFunction& f, double lambda2, std::span<const Interval> set,
                                 ModeCutoff cutoff);
GridFunction spectral_projection(const GridFunction& f, double lambda2, Interval interval, ModeCutoff cutoff);

/// Bottom of the spectrum, 2 |l2|.
double spectrum_bottom(double lambda2);

/// Largest gap in the sorted set {nu_{(l1, l2), m}} over the given l1 values
/// and modes, restricted to [2 |l2|, upper] (both ends count as points).
double max_spectral_gap(double lambda2, std::span<const double> lambda1_grid, ModeCutoff cutoff, double upper);

}  // namespace hosc::spectral
