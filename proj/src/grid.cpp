#include "hosc/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

#include "hosc/errors.hpp"

namespace hosc {

Axis Axis::from_extent(double half_width, double spacing) {
  if (!(spacing > 0.0) || !(half_width > 0.0) || !std::isfinite(half_width))
    throw InvalidParameter("axis extent and spacing must be positive");
  const double ratio = half_width / spacing;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw InvalidParameter("axis spacing must divide the half width");
  return Axis{static_cast<int>(rounded), spacing};
}

Axis Axis::with_count(int count, double spacing) {
  if (count < 1 || count % 2 == 0)
    throw InvalidParameter("axis point count must be odd and positive");
  if (!(spacing > 0.0)) throw InvalidParameter("axis spacing must be positive");
  return Axis{(count - 1) / 2, spacing};
}

double Axis::frequency_spacing() const noexcept {
  return 2.0 * std::numbers::pi / (count() * spacing);
}

double Axis::frequency(int i) const noexcept {
  return (i - half_count) * frequency_spacing();
}

bool Axis::operator==(const Axis& other) const noexcept {
  return half_count == other.half_count &&
         std::abs(spacing - other.spacing) <= 1e-12 * spacing;
}

GridFunction::GridFunction(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > 3)
    throw InvalidParameter("grid functions are 1, 2 or 3 dimensional");
  std::size_t n = 1;
  for (const auto& a : axes_) n *= static_cast<std::size_t>(a.count());
  values_.assign(n, Complex{});
}

GridFunction::GridFunction(std::vector<Axis> axes, std::vector<Complex> values)
    : GridFunction(std::move(axes)) {
  if (values.size() != values_.size())
    throw InvalidParameter("value count does not match grid size");
  values_ = std::move(values);
}

double GridFunction::cell_volume() const noexcept {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.spacing;
  return v;
}

double GridFunction::norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return std::sqrt(s * cell_volume());
}

Complex GridFunction::inner(const GridFunction& g) const {
  if (!same_grid(g)) throw InvalidParameter("inner product of functions on different grids");
  Complex s{};
  for (std::size_t k = 0; k < values_.size(); ++k) s += values_[k] * std::conj(g.values_[k]);
  return s * cell_volume();
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::boundary_max_abs() const {
  double m = 0.0;
  const int d = dims();
  std::array<int, 3> n{1, 1, 1};
  for (int k = 0; k < d; ++k) n[k] = axes_[k].count();
  std::size_t idx = 0;
  for (int i = 0; i < n[0]; ++i)
    for (int j = 0; j < n[1]; ++j)
      for (int l = 0; l < n[2]; ++l, ++idx) {
        const bool edge = i == 0 || i == n[0] - 1 || (d > 1 && (j == 0 || j == n[1] - 1)) ||
                          (d > 2 && (l == 0 || l == n[2] - 1));
        if (edge) m = std::max(m, std::abs(values_[idx]));
      }
  return m;
}

GridFunction& GridFunction::operator+=(const GridFunction& g) {
  if (!same_grid(g)) throw InvalidParameter("sum of functions on different grids");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += g.values_[k];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& g) {
  if (!same_grid(g)) throw InvalidParameter("difference of functions on different grids");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= g.values_[k];
  return *this;
}

GridFunction& GridFunction::operator*=(Complex s) {
  for (auto& v : values_) v *= s;
  return *this;
}

namespace fft {
namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(int n) {
  return Buffer(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

// FFTW planning is not thread safe; execution on fresh arrays is.
fftw_plan plan_for(int n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  Buffer scratch = allocate(n);
  fftw_plan p = fftw_plan_dft_1d(n, scratch.get(), scratch.get(),
                                 sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  if (p == nullptr) throw InternalError("fftw planning failed");
  plans.emplace(key, p);
  return p;
}

class LineTransform {
 public:
  LineTransform(int n, int sign) : n_(n), half_((n - 1) / 2), plan_(plan_for(n, sign)), buf_(allocate(n)) {
    if (n % 2 == 0) throw InvalidParameter("centered DFT requires an odd length");
  }

  template <class Get, class Put>
  void run(Get&& get, Put&& put) {
    auto* b = reinterpret_cast<Complex*>(buf_.get());
    for (int i = 0; i < n_; ++i) b[(i - half_ + n_) % n_] = get(i);
    fftw_execute_dft(plan_, buf_.get(), buf_.get());
    for (int p = 0; p < n_; ++p) {
      const int k = p <= half_ ? p : p - n_;
      put(k + half_, b[p]);
    }
  }

 private:
  int n_;
  int half_;
  fftw_plan plan_;
  Buffer buf_;
};

// Calls fn(base, stride) for every line of f along axis.
template <class Fn>
void for_each_line(const GridFunction& f, int axis, Fn&& fn) {
  std::size_t stride = 1;
  for (int k = axis + 1; k < f.dims(); ++k) stride *= f.axis(k).count();
  std::size_t outer = 1;
  for (int k = 0; k < axis; ++k) outer *= f.axis(k).count();
  const std::size_t n = f.axis(axis).count();
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t s = 0; s < stride; ++s) fn(o * n * stride + s, stride);
}

template <class Multiplier>
GridFunction spectral_multiply(const GridFunction& f, int axis, Multiplier&& mult) {
  const Axis& a = f.axis(axis);
  const int n = a.count();
  std::vector<Complex> symbol(n);
  for (int k = 0; k < n; ++k) symbol[k] = mult(a.frequency(k)) / static_cast<double>(n);
  GridFunction out = f;
  LineTransform fwd(n, -1);
  LineTransform bwd(n, +1);
  std::vector<Complex> tmp(n);
  auto vals = out.values();
  for_each_line(f, axis, [&](std::size_t base, std::size_t stride) {
    fwd.run([&](int i) { return vals[base + i * stride]; },
            [&](int k, Complex v) { tmp[k] = v * symbol[k]; });
    bwd.run([&](int i) { return tmp[i]; },
            [&](int i, Complex v) { vals[base + i * stride] = v; });
  });
  return out;
}

}  // namespace

void centered_dft(std::span<Complex> line, int sign) {
  const int n = static_cast<int>(line.size());
  LineTransform t(n, sign);
  t.run([&](int i) { return line[i]; }, [&](int k, Complex v) { line[k] = v; });
}

void dft_along(GridFunction& f, int axis, int sign) {
  const int n = f.axis(axis).count();
  LineTransform t(n, sign);
  auto vals = f.values();
  for_each_line(f, axis, [&](std::size_t base, std::size_t stride) {
    t.run([&](int i) { return vals[base + i * stride]; },
          [&](int k, Complex v) { vals[base + k * stride] = v; });
  });
}

GridFunction derivative(const GridFunction& f, int axis, int order) {
  if (order < 0) throw InvalidParameter("derivative order must be non-negative");
  if (order == 0) return f;
  return spectral_multiply(f, axis, [order](double w) { return std::pow(Complex(0.0, w), order); });
}

GridFunction shift(const GridFunction& f, int axis, double s) {
  return spectral_multiply(f, axis, [s](double w) { return std::polar(1.0, w * s); });
}

}  // namespace fft
}  // namespace hosc
