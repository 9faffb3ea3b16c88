#pragma once

#include <Eigen/Core>

#include <array>

#include "hosc/grid.hpp"
#include "hosc/quadform.hpp"

namespace hosc::group {

// ---------------------------------------------------------------------------
// Heisenberg group H1

struct H1Element {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

/// (x, y, t)(x', y', t') = (x + x', y + y', t + t' + (x y' - x' y) / 2).
H1Element h1_multiply(const H1Element& a, const H1Element& b);
H1Element h1_inverse(const H1Element& a);

// ---------------------------------------------------------------------------
// Six-dimensional two-step group N in exponential coordinates
// v = (x1, y1, x2, y2), z = (z1, z2).

struct NElement {
  std::array<double, 4> v{};
  std::array<double, 2> z{};
};

NElement n_multiply(const NElement& a, const NElement& b);
NElement n_inverse(const NElement& a);

/// Coordinates on the basis (X1, Y1, X2, Y2, T1, T2).
using AlgebraVector = std::array<double, 6>;
enum class Basis { X1 = 0, Y1, X2, Y2, T1, T2 };

AlgebraVector basis_vector(Basis b);

/// Bilinear extension of [X1, Y1] = T1, [X1, X2] = [Y1, Y2] = T2; all other
/// brackets of basis elements vanish.
AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b);

/// Matrix of j_z on (X1, Y1, X2, Y2):
///   [[0, z1, z2, 0], [-z1, 0, 0, z2], [-z2, 0, 0, 0], [0, -z2, 0, 0]],
/// with determinant z2^4.
Eigen::Matrix4d jz_matrix(const std::array<double, 2>& z);

// ---------------------------------------------------------------------------
// Coadjoint orbits

/// l = (omega, lambda): omega on (X1, Y1, X2, Y2), lambda on (T1, T2).
struct LinearForm {
  std::array<double, 4> omega{};
  std::array<double, 2> lambda{};
};

enum class OrbitKind { generic, intermediate, character };

struct OrbitRepresentative {
  OrbitKind kind;
  LinearForm form;
};

/// l o Ad(n^{-1}) = (omega + j_lambda(v), lambda).
LinearForm coadjoint_act(const LinearForm& ell, const NElement& n);

/// Lambda components with magnitude at most this are treated as zero.
inline constexpr double kOrbitZeroTolerance = 1e-12;

/// Unique orbit representative: (0, lambda) when lambda2 != 0; omega
/// restricted to its (X2, Y2) part when lambda2 = 0, lambda1 != 0; the form
/// itself when lambda = 0.
OrbitRepresentative classify_orbit(const LinearForm& ell);

const char* to_string(OrbitKind kind);

// ---------------------------------------------------------------------------
// Unitary representations on grids. Translations are band-limited Fourier
// shifts; a shift larger than the half width of its axis raises DomainError.

/// rho_lambda(v, z) f(x, y) = exp(i l1 (z1 + (x y1 - x1 y) / 2)
///   + i l2 (z2 + x x2 + y y2 + x1 x2 / 2 + y1 y2 / 2)) f(x + x1, y + y1).
GridFunction rep_rho(const Lambda& lambda, const NElement& n, const GridFunction& f);

/// pi_lambda(v, z) h(u1, u2) = exp(i l1 (z1 + u1 y1 + x1 y1 / 2)
///   + i l2 (z2 + u1 x2 - u2 y1 + x1 x2 / 2 - y1 y2 / 2)) h(u1 + x1, u2 + y2).
GridFunction rep_pi(const Lambda& lambda, const NElement& n, const GridFunction& h);

/// pi_{l1, omega}(v, z) h(u) = exp(i l1 (z1 + u y1 + x1 y1 / 2))
///   exp(i (omega_1 x2 + omega_2 y2)) h(u + x1), for l1 != 0.
GridFunction rep_pi_intermediate(double lambda1, const std::array<double, 2>& omega,
                                 const NElement& n, const GridFunction& h);

/// One-dimensional character exp(i <omega, v>).
Complex character(const std::array<double, 4>& omega, const NElement& n);

// ---------------------------------------------------------------------------
// Infinitesimal representations (spectral differentiation).

enum class Rep { rho, pi };

GridFunction infinitesimal(const Lambda& lambda, Basis element, Rep rep, const GridFunction& f);

/// -d^2/du1^2 - d^2/du2^2 + (l1 u1 - l2 u2)^2 + (l2 u1)^2.
GridFunction sublaplacian_pi(const Lambda& lambda, const GridFunction& f);

/// -(d(X1)^2 + d(Y1)^2 + d(X2)^2 + d(Y2)^2) built from `infinitesimal`.
GridFunction sublaplacian(const Lambda& lambda, Rep rep, const GridFunction& f);

}  // namespace hosc::group
