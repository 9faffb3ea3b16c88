#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hosc {

using Complex = std::complex<double>;

/// Uniform axis symmetric about zero: points (i - half_count) * spacing for
/// i = 0 .. 2 * half_count. The point count is always odd and contains 0.
struct Axis {
  int half_count = 0;
  double spacing = 1.0;

  /// Axis spanning [-half_width, half_width]; half_width / spacing must be an
  /// integer (to 1e-9 relative), otherwise InvalidParameter.
  static Axis from_extent(double half_width, double spacing);
  /// Axis with `count` points (odd) and the given spacing.
  static Axis with_count(int count, double spacing);

  int count() const noexcept { return 2 * half_count + 1; }
  double half_width() const noexcept { return half_count * spacing; }
  double coord(int i) const noexcept { return (i - half_count) * spacing; }
  /// Angular frequency represented by centered DFT index i.
  double frequency(int i) const noexcept;
  /// Spacing of the angular-frequency grid, 2 pi / (count * spacing).
  double frequency_spacing() const noexcept;

  bool operator==(const Axis& other) const noexcept;
};

/// Complex samples of a function on a 1D, 2D or 3D rectangular grid, stored
/// row-major (last axis fastest).
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(std::vector<Axis> axes);
  GridFunction(std::vector<Axis> axes, std::vector<Complex> values);

  template <class F>
  static GridFunction sample1(const Axis& a, F&& f) {
    GridFunction g({a});
    for (int i = 0; i < a.count(); ++i) g.values_[i] = f(a.coord(i));
    return g;
  }

  template <class F>
  static GridFunction sample2(const Axis& a, const Axis& b, F&& f) {
    GridFunction g({a, b});
    std::size_t k = 0;
    for (int i = 0; i < a.count(); ++i)
      for (int j = 0; j < b.count(); ++j) g.values_[k++] = f(a.coord(i), b.coord(j));
    return g;
  }

  template <class F>
  static GridFunction sample3(const Axis& a, const Axis& b, const Axis& c, F&& f) {
    GridFunction g({a, b, c});
    std::size_t k = 0;
    for (int i = 0; i < a.count(); ++i)
      for (int j = 0; j < b.count(); ++j)
        for (int l = 0; l < c.count(); ++l)
          g.values_[k++] = f(a.coord(i), b.coord(j), c.coord(l));
    return g;
  }

  int dims() const noexcept { return static_cast<int>(axes_.size()); }
  const Axis& axis(int k) const { return axes_.at(k); }
  const std::vector<Axis>& axes() const noexcept { return axes_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<Complex> values() noexcept { return values_; }
  std::span<const Complex> values() const noexcept { return values_; }

  Complex& operator[](std::size_t k) { return values_[k]; }
  const Complex& operator[](std::size_t k) const { return values_[k]; }
  Complex& at(int i, int j) { return values_[index(i, j)]; }
  const Complex& at(int i, int j) const { return values_[index(i, j)]; }
  Complex& at(int i, int j, int l) { return values_[index(i, j, l)]; }
  const Complex& at(int i, int j, int l) const { return values_[index(i, j, l)]; }

  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * axes_[1].count() + j;
  }
  std::size_t index(int i, int j, int l) const noexcept {
    return (static_cast<std::size_t>(i) * axes_[1].count() + j) * axes_[2].count() + l;
  }

  /// Product of the axis spacings (trapezoidal quadrature weight).
  double cell_volume() const noexcept;
  /// Discrete L2 norm with the cell volume as weight.
  double norm() const;
  /// Discrete inner product: sum f * conj(g) * cell volume.
  Complex inner(const GridFunction& g) const;
  double max_abs() const;
  /// Largest magnitude on the outermost layer of grid points.
  double boundary_max_abs() const;

  bool same_grid(const GridFunction& g) const noexcept { return axes_ == g.axes_; }

  GridFunction& operator+=(const GridFunction& g);
  GridFunction& operator-=(const GridFunction& g);
  GridFunction& operator*=(Complex s);

  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(Complex s, GridFunction a) { return a *= s; }

 private:
  std::vector<Axis> axes_;
  std::vector<Complex> values_;
};

namespace fft {

/// In-place centered DFT of an odd-length line:
///   X_k = sum_j x_j exp(sign * 2 pi i j k / n),  j, k in [-(n-1)/2, (n-1)/2],
/// with index 0 of the span holding j = -(n-1)/2. Unnormalized.
void centered_dft(std::span<Complex> line, int sign);

/// Applies centered_dft to every line of `f` along `axis`.
void dft_along(GridFunction& f, int axis, int sign);

/// Spectral derivative of the given order along `axis` (periodic extension).
GridFunction derivative(const GridFunction& f, int axis, int order = 1);

/// Band-limited translation: returns g with g(.., x, ..) = f(.., x + shift, ..)
/// along `axis`.
GridFunction shift(const GridFunction& f, int axis, double shift);

}  // namespace fft

}  // namespace hosc
