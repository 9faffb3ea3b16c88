#include "hosc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hosc/errors.hpp"

namespace hosc::transforms {
namespace {

void require_3d(const GridFunction& f) {
  if (f.dims() != 3) throw InvalidParameter("central Fourier transform needs an (x, y, t) grid");
}

double t_boundary_ratio(const GridFunction& f) {
  const int nt = f.axis(2).count();
  double edge = 0.0;
  double peak = 0.0;
  for (int i = 0; i < f.axis(0).count(); ++i)
    for (int j = 0; j < f.axis(1).count(); ++j)
      for (int l = 0; l < nt; ++l) {
        const double v = std::abs(f.at(i, j, l));
        peak = std::max(peak, v);
        if (l == 0 || l == nt - 1) edge = std::max(edge, v);
      }
  return peak > 0.0 ? edge / peak : 0.0;
}

CentralFourier start(const GridFunction& f) {
  require_3d(f);
  CentralFourier out;
  out.t_axis = f.axis(2);
  out.boundary_ratio = t_boundary_ratio(f);
  out.decay_warning = out.boundary_ratio > 1e-8;
  return out;
}

}  // namespace

CentralFourier partial_fourier_central(const GridFunction& f) {
  CentralFourier out = start(f);
  out.canonical = true;
  GridFunction spectrum = f;
  fft::dft_along(spectrum, 2, -1);
  const Axis& t = f.axis(2);
  const Axis& ax = f.axis(0);
  const Axis& ay = f.axis(1);
  for (int k = 0; k < t.count(); ++k) {
    out.lambda1.push_back(t.frequency(k));
    GridFunction slice({ax, ay});
    for (int i = 0; i < ax.count(); ++i)
      for (int j = 0; j < ay.count(); ++j) slice.at(i, j) = t.spacing * spectrum.at(i, j, k);
    out.slices.push_back(std::move(slice));
  }
  return out;
}

CentralFourier partial_fourier_central(const GridFunction& f, std::span<const double> samples) {
  CentralFourier out = start(f);
  const Axis& t = f.axis(2);
  const Axis& ax = f.axis(0);
  const Axis& ay = f.axis(1);
  for (double l1 : samples) {
    std::vector<Complex> phase(t.count());
    for (int l = 0; l < t.count(); ++l) phase[l] = std::polar(t.spacing, -l1 * t.coord(l));
    GridFunction slice({ax, ay});
    for (int i = 0; i < ax.count(); ++i)
      for (int j = 0; j < ay.count(); ++j) {
        Complex s{};
        for (int l = 0; l < t.count(); ++l) s += phase[l] * f.at(i, j, l);
        slice.at(i, j) = s;
      }
    out.lambda1.push_back(l1);
    out.slices.push_back(std::move(slice));
  }
  return out;
}

GridFunction inverse_partial_fourier_central(const CentralFourier& tr) {
  if (!tr.canonical) throw InvalidParameter("inverse needs the canonical FFT samples");
  const Axis& t = tr.t_axis;
  if (static_cast<int>(tr.slices.size()) != t.count()) throw InvalidParameter("slice count mismatch");
  const Axis ax = tr.slices.front().axis(0);
  const Axis ay = tr.slices.front().axis(1);
  GridFunction f({ax, ay, t});
  for (int k = 0; k < t.count(); ++k)
    for (int i = 0; i < ax.count(); ++i)
      for (int j = 0; j < ay.count(); ++j) f.at(i, j, k) = tr.slices[k].at(i, j);
  fft::dft_along(f, 2, +1);
  f *= 1.0 / (t.count() * t.spacing);
  return f;
}

Axis dual_axis(const Axis& axis, double lambda2) {
  if (lambda2 == 0.0) throw InvalidParameter("lambda2 must be nonzero");
  return Axis::with_count(axis.count(), 2.0 * std::numbers::pi / (std::abs(lambda2) * axis.count() * axis.spacing));
}

namespace {

// Scaled DFT along axis 1 onto the dual axis with kernel exp(sign i |l2| y z).
GridFunction scaled_transform(const GridFunction& in, double lambda2, int sign,
                              const std::optional<Axis>& target) {
  if (in.dims() != 2) throw InvalidParameter("intertwiner acts on 2D grid functions");
  const Axis out_axis = dual_axis(in.axis(1), lambda2);
  if (target && !(*target == out_axis))
    throw ResamplingError("target axis is not the dual of the input axis for this lambda2");
  GridFunction g = in;
  fft::dft_along(g, 1, sign);
  g *= std::sqrt(std::abs(lambda2) / (2.0 * std::numbers::pi)) * in.axis(1).spacing;
  return GridFunction({in.axis(0), out_axis}, std::vector<Complex>(g.values().begin(), g.values().end()));
}

void chirp(GridFunction& g, double lambda1, double sign) {
  const Axis& a = g.axis(0);
  const Axis& b = g.axis(1);
  for (int i = 0; i < a.count(); ++i)
    for (int j = 0; j < b.count(); ++j) g.at(i, j) *= std::polar(1.0, sign * 0.5 * lambda1 * a.coord(i) * b.coord(j));
}

int sign_of(double v) { return v > 0.0 ? 1 : -1; }

}  // namespace

GridFunction intertwiner_T(const Lambda& lambda, const GridFunction& h, std::optional<Axis> target_y) {
  GridFunction g = scaled_transform(h, lambda.lambda2(), -sign_of(lambda.lambda2()), target_y);
  chirp(g, lambda.lambda1(), +1.0);
  return g;
}

GridFunction intertwiner_T_inverse(const Lambda& lambda, const GridFunction& f, std::optional<Axis> target_z) {
  if (f.dims() != 2) throw InvalidParameter("intertwiner acts on 2D grid functions");
  GridFunction g = f;
  chirp(g, lambda.lambda1(), -1.0);
  return scaled_transform(g, lambda.lambda2(), sign_of(lambda.lambda2()), target_z);
}

}  // namespace hosc::transforms
