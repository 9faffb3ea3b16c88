#include "hosc/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "hosc/eigensystem.hpp"
#include "hosc/errors.hpp"

namespace hosc::oracle {
namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;

SparseMatrix assemble(const FdProblem& p, double h) {
  const int n = p.n_points;
  const Eigen::Matrix2d m = potential_matrix(p.lambda);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * n * 5);
  auto coord = [&](int i) { return -p.half_width + (i + 1) * h; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int r = i * n + j;
      const Eigen::Vector2d u(coord(i), coord(j));
      triplets.emplace_back(r, r, 4.0 * inv_h2 + u.dot(m * u));
      if (i > 0) triplets.emplace_back(r, r - n, -inv_h2);
      if (i + 1 < n) triplets.emplace_back(r, r + n, -inv_h2);
      if (j > 0) triplets.emplace_back(r, r - 1, -inv_h2);
      if (j + 1 < n) triplets.emplace_back(r, r + 1, -inv_h2);
    }
  SparseMatrix a(n * n, n * n);
  a.setFromTriplets(triplets.begin(), triplets.end());
  return a;
}

// Orthogonalizes the columns of w against basis[:, :used] and among
// themselves (two passes of Gram-Schmidt); drops columns that collapse.
// Returns the accepted columns.
Eigen::MatrixXd orthogonalize(const Eigen::MatrixXd& basis, Eigen::Index used, Eigen::MatrixXd w) {
  std::vector<Eigen::VectorXd> accepted;
  for (Eigen::Index c = 0; c < w.cols(); ++c) {
    Eigen::VectorXd v = w.col(c);
    const double start = v.norm();
    if (start == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      if (used > 0) v -= basis.leftCols(used) * (basis.leftCols(used).transpose() * v);
      for (const auto& q : accepted) v -= q * q.dot(v);
    }
    const double norm = v.norm();
    if (norm > 1e-10 * start) accepted.push_back(v / norm);
  }
  Eigen::MatrixXd out(w.rows(), static_cast<Eigen::Index>(accepted.size()));
  for (std::size_t k = 0; k < accepted.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = accepted[k];
  return out;
}

}  // namespace

FdSolution fd_eigenvalues(const FdProblem& p, SolverOptions options) {
  if (p.n_points < 32) throw InvalidParameter("finite-difference grids need at least 32 points per axis");
  if (p.n_eigs < 1) throw InvalidParameter("n_eigs must be positive");
  if (!(p.half_width > 0.0)) throw InvalidParameter("half width must be positive");

  const int n = p.n_points;
  const double h = 2.0 * p.half_width / (n + 1);
  const SparseMatrix a = assemble(p, h);
  Eigen::SimplicialLDLT<SparseMatrix> ldlt(a);
  if (ldlt.info() != Eigen::Success) throw InternalError("sparse LDL^T factorization failed");

  const Eigen::Index dim = a.rows();
  const int block = p.n_eigs;
  const Eigen::Index cap = std::min<Eigen::Index>(options.max_basis, dim);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd start(dim, block);
  for (Eigen::Index c = 0; c < block; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) start(r, c) = normal(rng);

  Eigen::MatrixXd basis(dim, cap);
  Eigen::MatrixXd images(dim, cap);  // A^{-1} basis
  Eigen::Index used = 0;
  Eigen::MatrixXd next = orthogonalize(basis, 0, start);

  FdSolution sol;
  sol.spacing = h;
  std::vector<double> residuals;
  while (true) {
    const Eigen::Index add = std::min<Eigen::Index>(next.cols(), cap - used);
    if (add == 0) break;
    for (Eigen::Index c = 0; c < add; ++c) {
      basis.col(used + c) = next.col(c);
      images.col(used + c) = ldlt.solve(next.col(c));
    }
    const Eigen::Index prev = used;
    used += add;

    if (used >= block) {
      const Eigen::MatrixXd hmat = basis.leftCols(used).transpose() * images.leftCols(used);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (hmat + hmat.transpose()));
      // Largest Ritz values of A^{-1} are the smallest eigenvalues of A.
      sol.eigenvalues.assign(block, 0.0);
      sol.eigenvectors.resize(dim, block);
      residuals.assign(block, 0.0);
      bool converged = true;
      for (int k = 0; k < block; ++k) {
        const Eigen::Index idx = used - 1 - k;
        const double theta = es.eigenvalues()[idx];
        Eigen::VectorXd x = basis.leftCols(used) * es.eigenvectors().col(idx);
        x.normalize();
        const double nu = 1.0 / theta;
        const Eigen::VectorXd r = a * x - nu * x;
        residuals[k] = r.norm() / nu;
        converged = converged && residuals[k] <= options.tolerance;
        sol.eigenvalues[k] = nu;
        sol.eigenvectors.col(k) = x;
      }
      if (converged) break;
    }
    next = orthogonalize(basis, used, images.middleCols(prev, add));
    if (next.cols() == 0) break;
  }
  sol.residuals = residuals;
  sol.basis_size = static_cast<int>(used);
  const double worst = residuals.empty() ? 1.0 : *std::max_element(residuals.begin(), residuals.end());
  if (residuals.empty() || worst > options.tolerance) {
    std::ostringstream msg;
    msg << "finite-difference eigensolver did not converge: basis " << used << ", residuals";
    for (double r : residuals) msg << ' ' << r;
    throw ConvergenceError(msg.str());
  }

  // Ascending order (Ritz values came out descending in 1/nu, i.e. ascending in nu).
  std::vector<int> order(block);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return sol.eigenvalues[x] < sol.eigenvalues[y]; });
  FdSolution sorted = sol;
  for (int k = 0; k < block; ++k) {
    sorted.eigenvalues[k] = sol.eigenvalues[order[k]];
    sorted.eigenvectors.col(k) = sol.eigenvectors.col(order[k]);
    sorted.residuals[k] = sol.residuals[order[k]];
  }

  double ratio = 0.0;
  for (int k = 0; k < block; ++k) {
    const auto v = sorted.eigenvectors.col(k);
    double edge = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i == 0 || j == 0 || i == n - 1 || j == n - 1) edge = std::max(edge, std::abs(v[i * n + j]));
    ratio = std::max(ratio, edge / v.cwiseAbs().maxCoeff());
  }
  sorted.boundary_ratio = ratio;
  sorted.boundary_warning = ratio > 1e-10;
  return sorted;
}

FdComparison fd_compare(const Lambda& lambda, int mode_count, std::span<const int> resolutions, double half_width) {
  if (resolutions.size() < 2) throw InvalidParameter("Richardson extrapolation needs two resolutions");
  if (mode_count < 1) throw InvalidParameter("mode count must be positive");
  std::vector<int> res(resolutions.begin(), resolutions.end());
  std::sort(res.begin(), res.end());

  FdComparison out;
  out.resolutions = res;
  std::vector<FdSolution> solutions;
  for (int n : res) {
    solutions.push_back(fd_eigenvalues(FdProblem{lambda, half_width, n, mode_count}));
    out.spacings.push_back(solutions.back().spacing);
  }
  const auto exact = enumerate_spectrum(lambda, mode_count);
  const FdSolution& coarse = solutions[solutions.size() - 2];
  const FdSolution& fine = solutions.back();
  const double ratio = coarse.spacing / fine.spacing;
  const double r2 = ratio * ratio;
  for (int k = 0; k < mode_count; ++k) {
    FdEntry e;
    e.index = k;
    e.exact = exact[k].eigenvalue;
    for (const auto& s : solutions) e.fd.push_back(s.eigenvalues[k]);
    e.extrapolated = (r2 * fine.eigenvalues[k] - coarse.eigenvalues[k]) / (r2 - 1.0);
    e.deviation = std::abs(e.extrapolated - e.exact);
    out.max_deviation = std::max(out.max_deviation, e.deviation);
    out.entries.push_back(std::move(e));
  }
  for (int k = 0; k < mode_count;) {
    int size = 1;
    while (k + size < mode_count &&
           std::abs(exact[k + size].eigenvalue - exact[k].eigenvalue) <= 1e-9 * exact[k].eigenvalue)
      ++size;
    double mean = 0.0;
    for (int j = 0; j < size; ++j) mean += out.entries[k + j].extrapolated;
    mean /= size;
    FdCluster c{k, size, exact[k].eigenvalue, mean, std::abs(mean - exact[k].eigenvalue)};
    out.max_cluster_deviation = std::max(out.max_cluster_deviation, c.deviation);
    out.clusters.push_back(c);
    k += size;
  }
  return out;
}

}  // namespace hosc::oracle
