#include "hosc/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "hosc/errors.hpp"
#include "hosc/transforms.hpp"

namespace hosc::spectral {

Complex SpectralCoefficients::at(std::size_t k, ModeIndex m) const {
  return values.at(k)(m.m_plus, m.m_minus);
}

double SpectralCoefficients::weighted_energy() const {
  double s = 0.0;
  for (const auto& c : values) s += c.squaredNorm();
  return s * measure_weight;
}

namespace {

void validate(const GridFunction& f, double lambda2, ModeCutoff cutoff) {
  if (f.dims() != 3) throw InvalidParameter("spectral operations act on (x, y, t) grid functions");
  if (lambda2 == 0.0 || !std::isfinite(lambda2)) throw InvalidParameter("lambda2 must be nonzero");
  if (cutoff.max_plus < 0 || cutoff.max_minus < 0 || cutoff.max_plus > 200 || cutoff.max_minus > 200)
    throw InvalidParameter("mode cutoff must lie in [0, 200]");
}

// Since T is unitary on the grid, (F, T h) = (T^{-1} F, h); the projection
// runs against the tabulated eigenfunctions on the (x, z) grid.
SpectralCoefficients from_transform(const transforms::CentralFourier& tr, double lambda2, ModeCutoff cutoff) {
  SpectralCoefficients out;
  out.lambda2 = lambda2;
  out.lambda1 = tr.lambda1;
  out.measure_weight = tr.canonical ? tr.measure_weight() : 0.0;
  out.cutoff = cutoff;
  out.accuracy_warning = tr.decay_warning;
  for (std::size_t k = 0; k < tr.lambda1.size(); ++k) {
    const Lambda lambda(tr.lambda1[k], lambda2);
    const GridFunction g = transforms::intertwiner_T_inverse(lambda, tr.slices[k]);
    const ModeTable table(lambda, g.axis(0), g.axis(1), cutoff.max_plus, cutoff.max_minus);
    out.values.push_back(table.project(g));
  }
  return out;
}

}  // namespace

SpectralCoefficients coefficients(const GridFunction& f, double lambda2, ModeCutoff cutoff) {
  validate(f, lambda2, cutoff);
  return from_transform(transforms::partial_fourier_central(f), lambda2, cutoff);
}

SpectralCoefficients coefficients(const GridFunction& f, double lambda2, std::span<const double> samples,
                                  ModeCutoff cutoff) {
  validate(f, lambda2, cutoff);
  return from_transform(transforms::partial_fourier_central(f, samples), lambda2, cutoff);
}

GridFunction heisenberg_oscillator(const GridFunction& f, double lambda2) {
  if (f.dims() != 3) throw InvalidParameter("the Heisenberg oscillator acts on (x, y, t) grid functions");
  const Axis& ax = f.axis(0);
  const Axis& ay = f.axis(1);
  const Axis& at = f.axis(2);

  // X g = d_x g - (y/2) d_t g,  Y g = d_y g + (x/2) d_t g.
  auto apply_x = [&](const GridFunction& g) {
    GridFunction out = fft::derivative(g, 0);
    const GridFunction gt = fft::derivative(g, 2);
    for (int i = 0; i < ax.count(); ++i)
      for (int j = 0; j < ay.count(); ++j)
        for (int l = 0; l < at.count(); ++l) out.at(i, j, l) -= 0.5 * ay.coord(j) * gt.at(i, j, l);
    return out;
  };
  auto apply_y = [&](const GridFunction& g) {
    GridFunction out = fft::derivative(g, 1);
    const GridFunction gt = fft::derivative(g, 2);
    for (int i = 0; i < ax.count(); ++i)
      for (int j = 0; j < ay.count(); ++j)
        for (int l = 0; l < at.count(); ++l) out.at(i, j, l) += 0.5 * ax.coord(i) * gt.at(i, j, l);
    return out;
  };

  GridFunction out = apply_x(apply_x(f)) + apply_y(apply_y(f));
  out *= -1.0;
  const double l22 = lambda2 * lambda2;
  for (int i = 0; i < ax.count(); ++i)
    for (int j = 0; j < ay.count(); ++j) {
      const double r2 = ax.coord(i) * ax.coord(i) + ay.coord(j) * ay.coord(j);
      for (int l = 0; l < at.count(); ++l) out.at(i, j, l) += l22 * r2 * f.at(i, j, l);
    }
  return out;
}

SpectralCoefficients apply_operator_coefficients(const GridFunction& f, double lambda2, ModeCutoff cutoff) {
  validate(f, lambda2, cutoff);
  return coefficients(heisenberg_oscillator(f, lambda2), lambda2, cutoff);
}

GridFunction spectral_projection(const GridFunction& f, double lambda2, std::span<const Interval> set,
                                 ModeCutoff cutoff) {
  validate(f, lambda2, cutoff);
  transforms::CentralFourier tr = transforms::partial_fourier_central(f);
  for (std::size_t k = 0; k < tr.lambda1.size(); ++k) {
    const Lambda lambda(tr.lambda1[k], lambda2);
    const GridFunction g = transforms::intertwiner_T_inverse(lambda, tr.slices[k]);
    const ModeTable table(lambda, g.axis(0), g.axis(1), cutoff.max_plus, cutoff.max_minus);
    Eigen::MatrixXcd c = table.project(g);
    for (int a = 0; a <= cutoff.max_plus; ++a)
      for (int b = 0; b <= cutoff.max_minus; ++b) {
        const double nu = eigenvalue(lambda, ModeIndex(a, b));
        const bool inside = std::any_of(set.begin(), set.end(), [nu](const Interval& iv) { return iv.contains(nu); });
        if (!inside) c(a, b) = 0.0;
      }
    tr.slices[k] = transforms::intertwiner_T(lambda, table.synthesize(c), tr.slices[k].axis(1));
  }
  return transforms::inverse_partial_fourier_central(tr);
}

GridFunction spectral_projection(const GridFunction& f, double lambda2, Interval interval, ModeCutoff cutoff) {
  return spectral_projection(f, lambda2, std::span<const Interval>(&interval, 1), cutoff);
}

double spectrum_bottom(double lambda2) {
  if (lambda2 == 0.0 || !std::isfinite(lambda2)) throw InvalidParameter("lambda2 must be nonzero");
  return 2.0 * std::abs(lambda2);
}

double max_spectral_gap(double lambda2, std::span<const double> lambda1_grid, ModeCutoff cutoff, double upper) {
  const double bottom = spectrum_bottom(lambda2);
  std::vector<double> points{bottom, upper};
  for (double l1 : lambda1_grid) {
    const Lambda lambda(l1, lambda2);
    for (int a = 0; a <= cutoff.max_plus; ++a)
      for (int b = 0; b <= cutoff.max_minus; ++b) {
        const double nu = eigenvalue(lambda, ModeIndex(a, b));
        if (nu >= bottom && nu <= upper) points.push_back(nu);
      }
  }
  std::sort(points.begin(), points.end());
  double gap = 0.0;
  for (std::size_t k = 1; k < points.size(); ++k) gap = std::max(gap, points[k] - points[k - 1]);
  return gap;
}

}  // namespace hosc::spectral
