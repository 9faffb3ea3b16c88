#pragma once

#include <span>
#include <vector>

namespace hosc::hermite {

inline constexpr int kMaxDegree = 200;

/// Physicists' Hermite polynomial H_m(x) by the three-term recurrence.
/// Overflows to +-inf where |H_m(x)| exceeds the double range.
double polynomial(int m, double x);

/// Hermite function. With normalized=false returns h_m(x) = exp(-x^2/2) H_m(x);
/// with normalized=true returns the L2-normalized
/// (2^m m! sqrt(pi))^{-1/2} h_m(x). Both are computed from the normalized
/// recurrence, so the result is finite whenever the true value is.
double function(int m, double x, bool normalized = true);

/// Normalized Hermite functions of degree 0..max_degree at x, written to `out`
/// (size max_degree + 1).
void normalized_table(int max_degree, double x, std::span<double> out);

struct QuadratureNode {
  double node;
  double weight;
};

/// Gauss-Hermite rule for the weight exp(-x^2): n nodes (roots of H_n) in
/// increasing order with positive weights, exact for polynomials of degree
/// up to 2n - 1.
std::vector<QuadratureNode> gauss_nodes(int n);

}  // namespace hosc::hermite
