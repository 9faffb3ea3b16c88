#include "hosc/group.hpp"

#include <cmath>

#include "hosc/errors.hpp"

namespace hosc::group {

H1Element h1_multiply(const H1Element& a, const H1Element& b) {
  return {a.x + b.x, a.y + b.y, a.t + b.t + 0.5 * (a.x * b.y - b.x * a.y)};
}

H1Element h1_inverse(const H1Element& a) { return {-a.x, -a.y, -a.t}; }

NElement n_multiply(const NElement& a, const NElement& b) {
  const auto& [x1, y1, x2, y2] = a.v;
  const auto& [bx1, by1, bx2, by2] = b.v;
  NElement c;
  for (int k = 0; k < 4; ++k) c.v[k] = a.v[k] + b.v[k];
  c.z[0] = a.z[0] + b.z[0] + 0.5 * (x1 * by1 - bx1 * y1);
  c.z[1] = a.z[1] + b.z[1] + 0.5 * (x1 * bx2 - x2 * bx1) + 0.5 * (y1 * by2 - y2 * by1);
  return c;
}

NElement n_inverse(const NElement& a) {
  NElement c;
  for (int k = 0; k < 4; ++k) c.v[k] = -a.v[k];
  c.z = {-a.z[0], -a.z[1]};
  return c;
}

AlgebraVector basis_vector(Basis b) {
  AlgebraVector e{};
  e[static_cast<int>(b)] = 1.0;
  return e;
}

AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b) {
  // a = (x1, y1, x2, y2, t1, t2)
  AlgebraVector c{};
  c[4] = a[0] * b[1] - a[1] * b[0];
  c[5] = a[0] * b[2] - a[2] * b[0] + a[1] * b[3] - a[3] * b[1];
  return c;
}

Eigen::Matrix4d jz_matrix(const std::array<double, 2>& z) {
  const double z1 = z[0];
  const double z2 = z[1];
  Eigen::Matrix4d j;
  j << 0.0, z1, z2, 0.0,
      -z1, 0.0, 0.0, z2,
      -z2, 0.0, 0.0, 0.0,
      0.0, -z2, 0.0, 0.0;
  return j;
}

LinearForm coadjoint_act(const LinearForm& ell, const NElement& n) {
  const Eigen::Vector4d shift = jz_matrix(ell.lambda) * Eigen::Vector4d(n.v[0], n.v[1], n.v[2], n.v[3]);
  LinearForm out = ell;
  for (int k = 0; k < 4; ++k) out.omega[k] += shift[k];
  return out;
}

OrbitRepresentative classify_orbit(const LinearForm& ell) {
  const bool l1_zero = std::abs(ell.lambda[0]) <= kOrbitZeroTolerance;
  const bool l2_zero = std::abs(ell.lambda[1]) <= kOrbitZeroTolerance;
  if (!l2_zero) return {OrbitKind::generic, LinearForm{{0.0, 0.0, 0.0, 0.0}, ell.lambda}};
  if (!l1_zero)
    return {OrbitKind::intermediate,
            LinearForm{{0.0, 0.0, ell.omega[2], ell.omega[3]}, {ell.lambda[0], 0.0}}};
  return {OrbitKind::character, ell};
}

const char* to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::generic:
      return "generic";
    case OrbitKind::intermediate:
      return "intermediate";
    case OrbitKind::character:
      return "character";
  }
  return "unknown";
}

namespace {

GridFunction translate(const GridFunction& f, int axis, double amount) {
  if (std::abs(amount) > f.axis(axis).half_width())
    throw DomainError("translation exceeds the grid half width");
  if (amount == 0.0) return f;
  return fft::shift(f, axis, amount);
}

void require_dims(const GridFunction& f, int d) {
  if (f.dims() != d) throw InvalidParameter("grid function has the wrong dimension");
}

}  // namespace

GridFunction rep_rho(const Lambda& lambda, const NElement& n, const GridFunction& f) {
  require_dims(f, 2);
  const double l1 = lambda.lambda1();
  const double l2 = lambda.lambda2();
  const auto& [x1, y1, x2, y2] = n.v;
  GridFunction g = translate(translate(f, 0, x1), 1, y1);
  const Axis& ax = g.axis(0);
  const Axis& ay = g.axis(1);
  for (int i = 0; i < ax.count(); ++i)
    for (int j = 0; j < ay.count(); ++j) {
      const double x = ax.coord(i);
      const double y = ay.coord(j);
      const double phase = l1 * (n.z[0] + 0.5 * (x * y1 - x1 * y)) +
                           l2 * (n.z[1] + x * x2 + y * y2 + 0.5 * x1 * x2 + 0.5 * y1 * y2);
      g.at(i, j) *= std::polar(1.0, phase);
    }
  return g;
}

GridFunction rep_pi(const Lambda& lambda, const NElement& n, const GridFunction& h) {
  require_dims(h, 2);
  const double l1 = lambda.lambda1();
  const double l2 = lambda.lambda2();
  const auto& [x1, y1, x2, y2] = n.v;
  GridFunction g = translate(translate(h, 0, x1), 1, y2);
  const Axis& a1 = g.axis(0);
  const Axis& a2 = g.axis(1);
  for (int i = 0; i < a1.count(); ++i)
    for (int j = 0; j < a2.count(); ++j) {
      const double u1 = a1.coord(i);
      const double u2 = a2.coord(j);
      const double phase = l1 * (n.z[0] + u1 * y1 + 0.5 * x1 * y1) +
                           l2 * (n.z[1] + u1 * x2 - u2 * y1 + 0.5 * x1 * x2 - 0.5 * y1 * y2);
      g.at(i, j) *= std::polar(1.0, phase);
    }
  return g;
}

GridFunction rep_pi_intermediate(double lambda1, const std::array<double, 2>& omega,
                                 const NElement& n, const GridFunction& h) {
  require_dims(h, 1);
  if (lambda1 == 0.0 || !std::isfinite(lambda1))
    throw InvalidParameter("intermediate representations need a nonzero lambda1");
  const auto& [x1, y1, x2, y2] = n.v;
  GridFunction g = translate(h, 0, x1);
  const Axis& a = g.axis(0);
  const double constant = omega[0] * x2 + omega[1] * y2;
  for (int i = 0; i < a.count(); ++i) {
    const double u = a.coord(i);
    g[i] *= std::polar(1.0, lambda1 * (n.z[0] + u * y1 + 0.5 * x1 * y1) + constant);
  }
  return g;
}

Complex character(const std::array<double, 4>& omega, const NElement& n) {
  double s = 0.0;
  for (int k = 0; k < 4; ++k) s += omega[k] * n.v[k];
  return std::polar(1.0, s);
}

namespace {

// f multiplied pointwise by i * c(x, y).
template <class Coefficient>
GridFunction times_i(const GridFunction& f, Coefficient&& c) {
  GridFunction g = f;
  const Axis& a = g.axis(0);
  const Axis& b = g.axis(1);
  for (int i = 0; i < a.count(); ++i)
    for (int j = 0; j < b.count(); ++j) g.at(i, j) *= Complex(0.0, c(a.coord(i), b.coord(j)));
  return g;
}

}  // namespace

GridFunction infinitesimal(const Lambda& lambda, Basis element, Rep rep, const GridFunction& f) {
  require_dims(f, 2);
  const double l1 = lambda.lambda1();
  const double l2 = lambda.lambda2();
  switch (element) {
    case Basis::T1:
      return Complex(0.0, l1) * f;
    case Basis::T2:
      return Complex(0.0, l2) * f;
    default:
      break;
  }
  if (rep == Rep::rho) {
    switch (element) {
      case Basis::X1:
        return fft::derivative(f, 0) + times_i(f, [&](double, double y) { return -0.5 * l1 * y; });
      case Basis::Y1:
        return fft::derivative(f, 1) + times_i(f, [&](double x, double) { return 0.5 * l1 * x; });
      case Basis::X2:
        return times_i(f, [&](double x, double) { return l2 * x; });
      case Basis::Y2:
        return times_i(f, [&](double, double y) { return l2 * y; });
      default:
        break;
    }
  } else {
    switch (element) {
      case Basis::X1:
        return fft::derivative(f, 0);
      case Basis::Y1:
        return times_i(f, [&](double u1, double u2) { return l1 * u1 - l2 * u2; });
      case Basis::X2:
        return times_i(f, [&](double u1, double) { return l2 * u1; });
      case Basis::Y2:
        return fft::derivative(f, 1);
      default:
        break;
    }
  }
  throw InternalError("unhandled basis element");
}

GridFunction sublaplacian_pi(const Lambda& lambda, const GridFunction& f) {
  require_dims(f, 2);
  const double l1 = lambda.lambda1();
  const double l2 = lambda.lambda2();
  GridFunction g = fft::derivative(f, 0, 2) + fft::derivative(f, 1, 2);
  g *= -1.0;
  const Axis& a = f.axis(0);
  const Axis& b = f.axis(1);
  for (int i = 0; i < a.count(); ++i)
    for (int j = 0; j < b.count(); ++j) {
      const double u1 = a.coord(i);
      const double u2 = b.coord(j);
      const double w = (l1 * u1 - l2 * u2) * (l1 * u1 - l2 * u2) + (l2 * u1) * (l2 * u1);
      g.at(i, j) += w * f.at(i, j);
    }
  return g;
}

GridFunction sublaplacian(const Lambda& lambda, Rep rep, const GridFunction& f) {
  GridFunction acc(f.axes());
  for (Basis b : {Basis::X1, Basis::Y1, Basis::X2, Basis::Y2})
    acc -= infinitesimal(lambda, b, rep, infinitesimal(lambda, b, rep, f));
  return acc;
}

}  // namespace hosc::group
