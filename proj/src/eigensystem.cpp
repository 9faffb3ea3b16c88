#include "hosc/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <tuple>

#include "hosc/errors.hpp"
#include "hosc/hermite.hpp"

namespace hosc {

ModeIndex::ModeIndex(int plus, int minus) : m_plus(plus), m_minus(minus) {
  if (plus < 0 || minus < 0 || plus > hermite::kMaxDegree || minus > hermite::kMaxDegree)
    throw InvalidParameter("mode indices must lie in [0, 200]");
}

double eigenvalue(const Lambda& lambda, ModeIndex mode) {
  const QuadFormDiag d = diagonalize(lambda);
  return std::sqrt(d.mu_plus) * (2 * mode.m_plus + 1) + std::sqrt(d.mu_minus) * (2 * mode.m_minus + 1);
}

std::vector<EigenPair> enumerate_spectrum(const Lambda& lambda, int count) {
  if (count < 1 || count > 10000) throw InvalidParameter("count must lie in [1, 10000]");
  const QuadFormDiag d = diagonalize(lambda);
  const double sp = std::sqrt(d.mu_plus);
  const double sm = std::sqrt(d.mu_minus);
  auto nu = [&](int a, int b) { return sp * (2 * a + 1) + sm * (2 * b + 1); };

  // nu is increasing in both indices, so a frontier walk visits the
  // lattice in eigenvalue order.
  using Entry = std::tuple<double, int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::set<std::pair<int, int>> seen;
  frontier.emplace(nu(0, 0), 0, 0);
  seen.emplace(0, 0);
  std::vector<EigenPair> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    auto [value, a, b] = frontier.top();
    frontier.pop();
    out.push_back({lambda, ModeIndex(a, b), value});
    for (auto [na, nb] : {std::pair{a + 1, b}, std::pair{a, b + 1}}) {
      if (na > hermite::kMaxDegree || nb > hermite::kMaxDegree) continue;
      if (seen.emplace(na, nb).second) frontier.emplace(nu(na, nb), na, nb);
    }
  }
  return out;
}

double eigenfunction(const Lambda& lambda, ModeIndex mode, const Eigen::Vector2d& u) {
  const QuadFormDiag d = diagonalize(lambda);
  const Eigen::Vector2d p = to_principal_axes(d, u);
  return std::sqrt(std::abs(lambda.lambda2())) *
         hermite::function(mode.m_plus, std::pow(d.mu_plus, 0.25) * p.x()) *
         hermite::function(mode.m_minus, std::pow(d.mu_minus, 0.25) * p.y());
}

GridFunction eigenfunction_grid(const Lambda& lambda, ModeIndex mode, const Axis& u1, const Axis& u2) {
  const QuadFormDiag d = diagonalize(lambda);
  const double ap = std::pow(d.mu_plus, 0.25);
  const double am = std::pow(d.mu_minus, 0.25);
  const double pre = std::sqrt(std::abs(lambda.lambda2()));
  return GridFunction::sample2(u1, u2, [&](double a, double b) {
    const Eigen::Vector2d p = to_principal_axes(d, Eigen::Vector2d(a, b));
    return Complex(pre * hermite::function(mode.m_plus, ap * p.x()) *
                   hermite::function(mode.m_minus, am * p.y()));
  });
}

int resolved_mode_limit(double scale, const Axis& axis) {
  constexpr double margin = 6.0;
  const double nyquist = std::numbers::pi / axis.spacing;
  int m = -1;
  while (m < hermite::kMaxDegree) {
    const double reach = std::sqrt(2.0 * (m + 1) + 1.0) + margin;
    if (reach / scale > axis.half_width() || scale * reach > nyquist) break;
    ++m;
  }
  return m;
}

ModeTable::ModeTable(const Lambda& lambda, const Axis& u1, const Axis& u2, int max_plus, int max_minus)
    : u1_(u1), u2_(u2), max_plus_(max_plus), max_minus_(max_minus),
      prefactor_(std::sqrt(std::abs(lambda.lambda2()))) {
  if (max_plus < 0 || max_minus < 0 || max_plus > hermite::kMaxDegree || max_minus > hermite::kMaxDegree)
    throw InvalidParameter("mode table bounds must lie in [0, 200]");
  const QuadFormDiag d = diagonalize(lambda);
  const double ap = std::pow(d.mu_plus, 0.25);
  const double am = std::pow(d.mu_minus, 0.25);
  const int n1 = u1.count();
  const int n2 = u2.count();
  plus_.resize(static_cast<Eigen::Index>(n1) * n2, max_plus + 1);
  minus_.resize(static_cast<Eigen::Index>(n1) * n2, max_minus + 1);
  std::vector<double> row(std::max(max_plus, max_minus) + 1);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      const Eigen::Index p = static_cast<Eigen::Index>(i) * n2 + j;
      const Eigen::Vector2d q = to_principal_axes(d, Eigen::Vector2d(u1.coord(i), u2.coord(j)));
      hermite::normalized_table(max_plus, ap * q.x(), row);
      for (int k = 0; k <= max_plus; ++k) plus_(p, k) = row[k];
      hermite::normalized_table(max_minus, am * q.y(), row);
      for (int k = 0; k <= max_minus; ++k) minus_(p, k) = row[k];
    }
}

Eigen::MatrixXcd ModeTable::project(const GridFunction& f) const {
  if (f.dims() != 2 || !(f.axis(0) == u1_) || !(f.axis(1) == u2_))
    throw InvalidParameter("projection onto a mode table defined on another grid");
  const auto vals = f.values();
  Eigen::Map<const Eigen::VectorXcd> fv(vals.data(), static_cast<Eigen::Index>(vals.size()));
  Eigen::MatrixXcd weighted = minus_.cast<Complex>().array().colwise() * fv.array();
  return (prefactor_ * f.cell_volume()) * (plus_.transpose().cast<Complex>() * weighted);
}

GridFunction ModeTable::synthesize(const Eigen::MatrixXcd& c) const {
  if (c.rows() != max_plus_ + 1 || c.cols() != max_minus_ + 1)
    throw InvalidParameter("coefficient matrix does not match the mode table");
  const Eigen::MatrixXcd partial = plus_.cast<Complex>() * c;  // points x (max_minus + 1)
  const Eigen::VectorXcd vals =
      prefactor_ * (partial.array() * minus_.cast<Complex>().array()).rowwise().sum();
  return GridFunction({u1_, u2_}, std::vector<Complex>(vals.data(), vals.data() + vals.size()));
}

GridFunction ModeTable::mode(ModeIndex m) const {
  if (m.m_plus > max_plus_ || m.m_minus > max_minus_) throw InvalidParameter("mode outside the table");
  GridFunction g({u1_, u2_});
  auto vals = g.values();
  for (std::size_t p = 0; p < vals.size(); ++p) {
    const auto idx = static_cast<Eigen::Index>(p);
    vals[p] = prefactor_ * plus_(idx, m.m_plus) * minus_(idx, m.m_minus);
  }
  return g;
}

}  // namespace hosc
