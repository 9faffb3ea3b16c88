#include "hosc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "hosc/eigensystem.hpp"
#include "hosc/errors.hpp"
#include "hosc/hermite.hpp"
#include "hosc/transforms.hpp"

namespace hosc::kernels {

MehlerParams::MehlerParams(double t_, double mu_) : t(t_), mu(mu_) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("Mehler time must be positive");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidParameter("Mehler potential strength must be positive");
}

namespace {

void check_time(double t) {
  if (!(t >= kMinTime)) {
    std::ostringstream msg;
    msg << "t = " << t << " is below " << kMinTime
        << "; the closed-form kernel degenerates to a delta, use the eigen-expansion instead";
    throw NearDeltaError(msg.str());
  }
}

// K(x, y) = amplitude * exp(-alpha (x^2 + y^2) + 2 beta x y).
struct Gaussian {
  double amplitude;
  double alpha;
  double beta;

  double operator()(double x, double y) const {
    return amplitude * std::exp(-alpha * (x * x + y * y) + 2.0 * beta * (x * y));
  }
};

// Q_tau(s x, s y) scaled by `pre`.
Gaussian scaled_q(double tau, double s, double pre) {
  check_time(tau);
  const double w = std::exp(-2.0 * tau);
  const double q = -std::expm1(-4.0 * tau);
  return {pre / std::sqrt(std::numbers::pi * q), s * s * (1.0 + w * w) / (2.0 * q), s * s * w / q};
}

Gaussian kernel_1d(double t, double mu, MehlerScaling scaling) {
  check_time(t);
  if (scaling == MehlerScaling::dilation) {
    const double s = std::pow(mu, 0.25);
    const double tau = t * std::sqrt(mu);
    return scaled_q(tau, s, s * std::exp(-tau));
  }
  const double s = std::sqrt(mu);
  const double tau = t * mu;
  return scaled_q(tau, s, s * std::exp(-tau));
}

struct Kappa {
  QuadFormDiag diag;
  Gaussian plus;
  Gaussian minus;

  Kappa(const Lambda& lambda, double t)
      : diag(diagonalize(lambda)),
        plus(kernel_1d(t, diag.mu_plus, MehlerScaling::dilation)),
        minus(kernel_1d(t, diag.mu_minus, MehlerScaling::dilation)) {}

  double operator()(const Eigen::Vector2d& u, const Eigen::Vector2d& v) const {
    const Eigen::Vector2d a = to_principal_axes(diag, u);
    const Eigen::Vector2d b = to_principal_axes(diag, v);
    // One exponential for both factors keeps large cross terms from
    // overflowing separately.
    const double e = -plus.alpha * (a.x() * a.x() + b.x() * b.x()) + 2.0 * plus.beta * (a.x() * b.x()) -
                     minus.alpha * (a.y() * a.y() + b.y() * b.y()) + 2.0 * minus.beta * (a.y() * b.y());
    return plus.amplitude * minus.amplitude * std::exp(e);
  }

  // Lower bound of the decay rate in every direction, upper bound of the
  // curvature.
  double decay() const { return std::min(plus.alpha - plus.beta, minus.alpha - minus.beta); }
  double curvature() const { return std::max(plus.alpha + plus.beta, minus.alpha + minus.beta); }
};

}  // namespace

double mehler_q(double t, double x, double y) {
  const Gaussian g = scaled_q(t, 1.0, 1.0);
  return g(x, y);
}

double mehler_k(const MehlerParams& params, double x, double y, MehlerScaling scaling) {
  return kernel_1d(params.t, params.mu, scaling)(x, y);
}

double mehler_series(const MehlerParams& params, double x, double y, int terms) {
  if (terms < 1 || terms > hermite::kMaxDegree + 1) throw InvalidParameter("series length must lie in [1, 201]");
  const double s = std::pow(params.mu, 0.25);
  std::vector<double> hx(terms);
  std::vector<double> hy(terms);
  hermite::normalized_table(terms - 1, s * x, hx);
  hermite::normalized_table(terms - 1, s * y, hy);
  const double rate = params.t * std::sqrt(params.mu);
  double sum = 0.0;
  for (int m = 0; m < terms; ++m) sum += std::exp(-rate * (2 * m + 1)) * hx[m] * hy[m];
  return s * sum;
}

std::vector<ScalingResidual> scaling_residuals() {
  const double root5 = std::sqrt(5.0);
  const std::vector<double> mus{0.25, 0.5 * (3.0 - root5), 2.0, 0.5 * (3.0 + root5)};
  const std::vector<double> times{0.5, 1.0, 2.0};
  std::vector<ScalingResidual> out;
  for (MehlerScaling scaling : {MehlerScaling::dilation, MehlerScaling::literal}) {
    double worst = 0.0;
    for (double mu : mus)
      for (double t : times) {
        const MehlerParams p(t, mu);
        double peak = 0.0;
        double err = 0.0;
        for (int i = -8; i <= 8; ++i)
          for (int j = -8; j <= 8; ++j) {
            const double x = 0.25 * i;
            const double y = 0.25 * j;
            const double ref = mehler_series(p, x, y, 60);
            peak = std::max(peak, std::abs(ref));
            err = std::max(err, std::abs(mehler_k(p, x, y, scaling) - ref));
          }
        worst = std::max(worst, err / peak);
      }
    out.push_back({scaling, worst});
  }
  return out;
}

MehlerScaling select_scaling() {
  const auto residuals = scaling_residuals();
  int matches = 0;
  MehlerScaling chosen = MehlerScaling::dilation;
  for (const auto& r : residuals)
    if (r.residual < 1e-6) {
      ++matches;
      chosen = r.scaling;
    }
  if (matches != 1) throw InternalError("Mehler scaling selection is ambiguous");
  return chosen;
}

double kernel_kappa(const Lambda& lambda, double t, const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return Kappa(lambda, t)(u, v);
}

KernelValue kernel_q_rho(const Lambda& lambda, double t, const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                         QuadratureOptions options) {
  const Kappa kappa(lambda, t);
  const double l1 = lambda.lambda1();
  const double l2 = lambda.lambda2();
  const double xo = p.x();
  const double yo = p.y();
  const double x = q.x();
  const double y = q.y();

  double half = options.half_width;
  if (half <= 0.0) half = std::sqrt(40.0 / kappa.decay()) + std::max(std::abs(xo), std::abs(x));
  int n = options.points;
  if (n <= 0) {
    const double omega = std::abs(l2) * std::max(std::abs(y), std::abs(yo));
    const double h = 2.0 * std::numbers::pi / (omega + std::sqrt(320.0 * kappa.curvature()));
    n = 2 * static_cast<int>(std::ceil(half / h)) + 1;
  }
  if (n % 2 == 0) ++n;
  if (n < 3) throw InvalidParameter("quadrature needs at least 3 points per axis");
  const Axis axis = Axis::with_count(n, 2.0 * half / (n - 1));

  Complex sum{};
  double peak = 0.0;
  double edge = 0.0;
  const int count = axis.count();
  std::vector<Complex> out_phase(count);
  for (int j = 0; j < count; ++j) out_phase[j] = std::polar(1.0, l2 * axis.coord(j) * y);
  for (int i = 0; i < count; ++i) {
    const double y1 = axis.coord(i);
    Complex row{};
    for (int j = 0; j < count; ++j) {
      const double k = kappa(Eigen::Vector2d(xo, y1), Eigen::Vector2d(x, axis.coord(j)));
      peak = std::max(peak, k);
      if (i == 0 || j == 0 || i == count - 1 || j == count - 1) edge = std::max(edge, k);
      row += k * out_phase[j];
    }
    sum += std::polar(1.0, -l2 * yo * y1) * row;
  }
  const double h = axis.spacing;
  const Complex value = std::abs(l2) / (2.0 * std::numbers::pi) * std::polar(1.0, 0.5 * l1 * (xo * yo - x * y)) *
                        sum * (h * h);
  const double ratio = peak > 0.0 ? edge / peak : 0.0;
  return {value, ratio, ratio > 1e-12};
}

std::vector<GridFunction> kappa_apply(const Lambda& lambda, double t, std::span<const GridFunction> fs) {
  if (fs.empty()) return {};
  const GridFunction& f = fs.front();
  if (f.dims() != 2) throw InvalidParameter("kappa acts on 2D grid functions");
  for (const auto& g : fs)
    if (!g.same_grid(f)) throw InvalidParameter("batched kappa inputs must share one grid");
  const Kappa kappa(lambda, t);
  const Axis& a1 = f.axis(0);
  const Axis& a2 = f.axis(1);
  const std::size_t n = f.size();
  std::vector<double> pa(n);
  std::vector<double> pb(n);
  for (int i = 0; i < a1.count(); ++i)
    for (int j = 0; j < a2.count(); ++j) {
      const Eigen::Vector2d pr = to_principal_axes(kappa.diag, Eigen::Vector2d(a1.coord(i), a2.coord(j)));
      pa[f.index(i, j)] = pr.x();
      pb[f.index(i, j)] = pr.y();
    }
  const auto& P = kappa.plus;
  const auto& M = kappa.minus;
  const double amp = P.amplitude * M.amplitude * f.cell_volume();
  std::vector<GridFunction> out;
  for (std::size_t k = 0; k < fs.size(); ++k) out.emplace_back(f.axes());
  // Rows are independent; split them across hardware threads.
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<double> row(n);
    for (std::size_t r = begin; r < end; ++r) {
      const double ar = pa[r];
      const double br = pb[r];
      const double base = -P.alpha * ar * ar - M.alpha * br * br;
      for (std::size_t c = 0; c < n; ++c)
        row[c] = std::exp(base - P.alpha * pa[c] * pa[c] + 2.0 * P.beta * ar * pa[c] - M.alpha * pb[c] * pb[c] +
                          2.0 * M.beta * br * pb[c]);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const auto in = fs[k].values();
        Complex acc{};
        for (std::size_t c = 0; c < n; ++c) acc += row[c] * in[c];
        out[k][r] = amp * acc;
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
  if (workers == 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w * n / workers, (w + 1) * n / workers);
  }
  return out;
}

GridFunction kappa_apply(const Lambda& lambda, double t, const GridFunction& f) {
  return std::move(kappa_apply(lambda, t, std::span<const GridFunction>(&f, 1)).front());
}

GridFunction q_rho_apply(const Lambda& lambda, double t, const GridFunction& f) {
  if (f.dims() != 2) throw InvalidParameter("Q acts on 2D grid functions");
  const Kappa kappa(lambda, t);
  const double l1 = lambda.lambda1();
  const double l2 = lambda.lambda2();
  const Axis& ax = f.axis(0);
  const Axis& ay = f.axis(1);
  const Axis az = transforms::dual_axis(ay, l2);
  const int nx = ax.count();
  const int ny = ay.count();
  const int sgn = l2 > 0.0 ? 1 : -1;
  const double scale = std::abs(l2) / (2.0 * std::numbers::pi) * az.spacing * az.spacing * f.cell_volume();

  GridFunction out(f.axes());
  GridFunction block({az, az});
  for (int io = 0; io < nx; ++io) {
    const double xo = ax.coord(io);
    for (int k = 0; k < nx; ++k) {
      const double x = ax.coord(k);
      for (int j1 = 0; j1 < ny; ++j1)
        for (int j2 = 0; j2 < ny; ++j2)
          block.at(j1, j2) = kappa(Eigen::Vector2d(xo, az.coord(j1)), Eigen::Vector2d(x, az.coord(j2)));
      // exp(-i l2 yo y1) along y1, exp(+i l2 y y2) along y2.
      fft::dft_along(block, 0, -sgn);
      fft::dft_along(block, 1, sgn);
      for (int jo = 0; jo < ny; ++jo) {
        const double yo = ay.coord(jo);
        Complex acc{};
        for (int j = 0; j < ny; ++j)
          acc += std::polar(1.0, 0.5 * l1 * (xo * yo - x * ay.coord(j))) * block.at(jo, j) * f.at(k, j);
        out.at(io, jo) += scale * acc;
      }
    }
  }
  return out;
}

HeatResult heat_apply(const Lambda& lambda, double t, const GridFunction& f, HeatMethod method,
                      HeatOptions options) {
  if (f.dims() != 2) throw InvalidParameter("heat semigroup acts on 2D grid functions");
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidParameter("heat time must be non-negative");
  if (method == HeatMethod::kernel) return {kappa_apply(lambda, t, f), 0.0, 0, 0};

  const QuadFormDiag d = diagonalize(lambda);
  const double sp = std::pow(d.mu_plus, 0.25);
  const double sm = std::pow(d.mu_minus, 0.25);
  const int max_plus = std::min(resolved_mode_limit(sp, f.axis(0)), resolved_mode_limit(sp, f.axis(1)));
  const int max_minus = std::min(resolved_mode_limit(sm, f.axis(0)), resolved_mode_limit(sm, f.axis(1)));
  if (max_plus < 0 || max_minus < 0) throw InvalidParameter("grid resolves no eigenfunction");

  const ModeTable table(lambda, f.axis(0), f.axis(1), max_plus, max_minus);
  Eigen::MatrixXcd c = table.project(f);
  const double remainder = (f - table.synthesize(c)).norm();
  const double rp = std::sqrt(d.mu_plus);
  const double rm = std::sqrt(d.mu_minus);
  const double nu_out = std::min(rp * (2 * max_plus + 3) + rm, rp + rm * (2 * max_minus + 3));
  const double bound = std::exp(-t * nu_out) * remainder;
  const double fnorm = f.norm();
  if (bound > options.tolerance * fnorm) {
    std::ostringstream msg;
    msg << "eigen-expansion tail bound " << bound << " exceeds tolerance " << options.tolerance * fnorm
        << " (modes up to (" << max_plus << ", " << max_minus << "))";
    throw TruncationError(msg.str(), bound);
  }
  for (int a = 0; a <= max_plus; ++a)
    for (int b = 0; b <= max_minus; ++b) c(a, b) *= std::exp(-t * (rp * (2 * a + 1) + rm * (2 * b + 1)));
  return {table.synthesize(c), bound, max_plus, max_minus};
}

}  // namespace hosc::kernels
