#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "hosc/quadform.hpp"

namespace hosc::oracle {

/// Dirichlet finite-difference discretization of
///   -d^2/du1^2 - d^2/du2^2 + u^T M u
/// on [-half_width, half_width]^2 with n_points interior points per axis
/// (spacing 2 half_width / (n_points + 1)) and the 5-point Laplacian.
struct FdProblem {
  Lambda lambda;
  double half_width = 8.0;
  int n_points = 128;
  int n_eigs = 6;
};

struct FdSolution {
  /// Smallest n_eigs eigenvalues, ascending.
  std::vector<double> eigenvalues;
  /// Matching eigenvectors, one column each, unit Euclidean norm, row index
  /// i * n_points + j for the point (u1_i, u2_j).
  Eigen::MatrixXd eigenvectors;
  /// ||A x - nu x|| / nu per eigenpair.
  std::vector<double> residuals;
  double spacing = 0.0;
  /// Largest eigenvector magnitude on the outermost interior ring relative
  /// to its maximum, over all returned eigenvectors.
  double boundary_ratio = 0.0;
  /// boundary_ratio above 1e-10: the Dirichlet box is tight for these modes.
  bool boundary_warning = false;
  int basis_size = 0;
};

struct SolverOptions {
  double tolerance = 1e-10;
  int max_basis = 400;
  std::uint64_t seed = 20240611;
};

/// Block Lanczos on A^{-1} (sparse LDL^T factorization) with full
/// reorthogonalization; the block size equals n_eigs, so degenerate clusters
/// of that size are resolved. Deterministic for a fixed seed. Throws
/// ConvergenceError with the residuals when the basis cap is reached.
FdSolution fd_eigenvalues(const FdProblem& problem, SolverOptions options = {});

struct FdEntry {
  int index;
  double exact;
  /// Raw FD values, one per resolution.
  std::vector<double> fd;
  double extrapolated;
  double deviation;
};

/// Eigenvalues equal (to 1e-9 relative) in the closed form, compared by
/// their means.
struct FdCluster {
  int first;
  int size;
  double exact;
  double extrapolated_mean;
  double deviation;
};

struct FdComparison {
  std::vector<int> resolutions;
  std::vector<double> spacings;
  std::vector<FdEntry> entries;
  std::vector<FdCluster> clusters;
  /// max |extrapolated - exact| over entries.
  double max_deviation = 0.0;
  double max_cluster_deviation = 0.0;
};

/// Runs fd_eigenvalues at each resolution, Richardson-extrapolates the two
/// finest (second order, exact spacing ratio), and compares with the
/// closed-form spectrum.
FdComparison fd_compare(const Lambda& lambda, int mode_count, std::span<const int> resolutions,
                        double half_width = 8.0);

}  // namespace hosc::oracle
