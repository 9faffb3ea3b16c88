#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "hosc/eigensystem.hpp"
#include "hosc/errors.hpp"
#include "hosc/group.hpp"
#include "hosc/hermite.hpp"
#include "hosc/kernels.hpp"
#include "hosc/oracle.hpp"
#include "hosc/quadform.hpp"
#include "hosc/spectral.hpp"
#include "hosc/verify.hpp"

namespace py = pybind11;
using namespace hosc;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const GridFunction& g) {
  ComplexArray out({g.axis(0).count(), g.axis(1).count()});
  auto v = g.values();
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

GridFunction from_numpy(const ComplexArray& a, double half_width, double spacing) {
  const Axis axis = Axis::from_extent(half_width, spacing);
  if (a.ndim() != 2 || a.shape(0) != axis.count() || a.shape(1) != axis.count())
    throw InvalidParameter("array shape does not match the grid given by half_width and spacing");
  GridFunction g(std::vector<Axis>{axis, axis});
  std::copy(a.data(), a.data() + a.size(), g.values().begin());
  return g;
}

kernels::HeatMethod parse_method(const std::string& name) {
  if (name == "eigen_expansion") return kernels::HeatMethod::eigen_expansion;
  if (name == "kernel") return kernels::HeatMethod::kernel;
  throw InvalidParameter("method must be 'eigen_expansion' or 'kernel'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heisenberg oscillator spectral toolkit (C++ core)";

  auto base = py::register_exception<Error>(m, "HoscError", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base);
  py::register_exception<UnsupportedDegree>(m, "UnsupportedDegree", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<ResamplingError>(m, "ResamplingError", base);
  py::register_exception<NearDeltaError>(m, "NearDeltaError", base);
  py::register_exception<TruncationError>(m, "TruncationError", base);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
  py::register_exception<InternalError>(m, "InternalError", base);

  m.def("hermite_polynomial", &hermite::polynomial, py::arg("m"), py::arg("x"));
  m.def("hermite_function", &hermite::function, py::arg("m"), py::arg("x"), py::arg("normalized") = true);
  m.def(
      "gauss_nodes",
      [](int n) {
        std::vector<double> nodes;
        std::vector<double> weights;
        for (const auto& q : hermite::gauss_nodes(n)) {
          nodes.push_back(q.node);
          weights.push_back(q.weight);
        }
        return py::make_tuple(py::array(py::cast(nodes)), py::array(py::cast(weights)));
      },
      py::arg("n"), "Gauss-Hermite nodes and weights for the weight exp(-x^2).");

  m.def(
      "diagonalize",
      [](double l1, double l2) {
        const QuadFormDiag d = diagonalize(Lambda(l1, l2));
        py::dict out;
        out["mu_plus"] = d.mu_plus;
        out["mu_minus"] = d.mu_minus;
        out["rotation"] = Eigen::Matrix2d(d.rotation);
        out["m_matrix"] = Eigen::Matrix2d(d.m_matrix);
        return out;
      },
      py::arg("lambda1"), py::arg("lambda2"));

  m.def(
      "eigenvalue",
      [](double l1, double l2, int mp, int mm) { return eigenvalue(Lambda(l1, l2), ModeIndex(mp, mm)); },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("m_plus"), py::arg("m_minus"));
  m.def(
      "spectrum",
      [](double l1, double l2, int count) {
        std::vector<std::tuple<int, int, double>> rows;
        for (const auto& p : enumerate_spectrum(Lambda(l1, l2), count))
          rows.emplace_back(p.mode.m_plus, p.mode.m_minus, p.eigenvalue);
        return rows;
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("count"),
      "Smallest eigenvalues as (m_plus, m_minus, nu), ascending.");
  m.def(
      "eigenfunction",
      [](double l1, double l2, int mp, int mm, double u1, double u2) {
        return eigenfunction(Lambda(l1, l2), ModeIndex(mp, mm), Eigen::Vector2d(u1, u2));
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("m_plus"), py::arg("m_minus"), py::arg("u1"), py::arg("u2"));
  m.def(
      "eigenfunction_grid",
      [](double l1, double l2, int mp, int mm, double half_width, double spacing) {
        const Axis axis = Axis::from_extent(half_width, spacing);
        return to_numpy(eigenfunction_grid(Lambda(l1, l2), ModeIndex(mp, mm), axis, axis));
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("m_plus"), py::arg("m_minus"), py::arg("half_width") = 8.0,
      py::arg("spacing") = 0.25, "Samples on [-R, R]^2; array index [i, j] is the point (u1_i, u2_j).");

  m.def("mehler_q", &kernels::mehler_q, py::arg("t"), py::arg("x"), py::arg("y"));
  m.def(
      "kernel_kappa",
      [](double l1, double l2, double t, std::array<double, 2> u, std::array<double, 2> v) {
        return kernels::kernel_kappa(Lambda(l1, l2), t, Eigen::Vector2d(u[0], u[1]), Eigen::Vector2d(v[0], v[1]));
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("t"), py::arg("u"), py::arg("v"));
  m.def(
      "kernel_q_rho",
      [](double l1, double l2, double t, std::array<double, 2> p, std::array<double, 2> q) {
        return kernels::kernel_q_rho(Lambda(l1, l2), t, Eigen::Vector2d(p[0], p[1]), Eigen::Vector2d(q[0], q[1])).value;
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("t"), py::arg("p"), py::arg("q"));
  m.def(
      "heat_apply",
      [](double l1, double l2, double t, const ComplexArray& f, double half_width, double spacing,
         const std::string& method) {
        const GridFunction g = from_numpy(f, half_width, spacing);
        return to_numpy(kernels::heat_apply(Lambda(l1, l2), t, g, parse_method(method)).value);
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("t"), py::arg("f"), py::arg("half_width"), py::arg("spacing"),
      py::arg("method") = "eigen_expansion");

  m.def("spectrum_bottom", &spectral::spectrum_bottom, py::arg("lambda2"));

  m.def(
      "classify_orbit",
      [](std::array<double, 4> omega, std::array<double, 2> lambda) {
        const auto r = group::classify_orbit(group::LinearForm{omega, lambda});
        return py::make_tuple(group::to_string(r.kind), r.form.omega, r.form.lambda);
      },
      py::arg("omega"), py::arg("lambda_"), "Returns (kind, omega, lambda) of the canonical representative.");

  m.def(
      "fd_eigenvalues",
      [](double l1, double l2, double half_width, int n_points, int n_eigs) {
        return oracle::fd_eigenvalues(oracle::FdProblem{Lambda(l1, l2), half_width, n_points, n_eigs}).eigenvalues;
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("half_width") = 8.0, py::arg("n_points") = 128,
      py::arg("n_eigs") = 6);

  m.def(
      "verify",
      [](const std::string& suite, double l1, double l2) {
        py::list out;
        for (const auto& c : verify::run_suite(suite, verify::SuiteOptions{l1, l2})) {
          py::dict d;
          d["name"] = suite + "." + c.name;
          d["pass"] = c.pass;
          d["measured"] = c.measured;
          d["tolerance"] = c.tolerance;
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("lambda1") = 1.0, py::arg("lambda2") = 1.0);
  m.attr("suites") = std::vector<std::string>(verify::kSuites.begin(), verify::kSuites.end());
}
