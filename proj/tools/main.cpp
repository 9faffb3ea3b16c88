// hosc: spectra, eigenfunctions, heat kernels and orbit classification for the
// Heisenberg oscillator, with JSON/CSV output and self-verification suites.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hosc/eigensystem.hpp"
#include "hosc/errors.hpp"
#include "hosc/group.hpp"
#include "hosc/kernels.hpp"
#include "hosc/verify.hpp"
#include "json_writer.hpp"

namespace {

using hosc::cli::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a number");
    }
  }
  if (out.size() != expected)
    throw UsageError(std::string(flag) + " expects " + std::to_string(expected) + " comma-separated numbers");
  return out;
}

void require_nonzero_lambda2(double lambda2) {
  if (lambda2 == 0.0) throw UsageError("--lambda2 must be nonzero (the spectrum needs lambda2 != 0)");
}

Json report(const std::string& command, Json parameters, Json results, Json checks = Json::array()) {
  Json r;
  r["command"] = command;
  r["parameters"] = std::move(parameters);
  r["results"] = std::move(results);
  r["checks"] = std::move(checks);
  return r;
}

Json grid_json(const hosc::GridFunction& g) {
  Json extents = Json::array();
  Json spacing = Json::array();
  for (const auto& a : g.axes()) {
    extents.push_back(a.half_width());
    spacing.push_back(a.spacing);
  }
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& v : g.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  Json out;
  out["extents"] = std::move(extents);
  out["spacing"] = std::move(spacing);
  out["values_real"] = std::move(re);
  out["values_imag"] = std::move(im);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for the Heisenberg oscillator L + lambda2^2 (x^2 + y^2)"};
  app.require_subcommand(1);
  // Lets --out follow the subcommand as well.
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  double lambda1 = 0.0;
  double lambda2 = 1.0;

  auto* spectrum = app.add_subcommand("spectrum", "Smallest eigenvalues nu_{lambda, m} with their modes");
  int count = 10;
  std::string format = "json";
  spectrum->add_option("--lambda1", lambda1, "lambda1")->capture_default_str();
  spectrum->add_option("--lambda2", lambda2, "lambda2 (nonzero)")->required();
  spectrum->add_option("--count", count, "Number of eigenvalues")->check(CLI::Range(1, 10000))->capture_default_str();
  spectrum->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* eigenfunction = app.add_subcommand("eigenfunction", "Unit-norm eigenfunction h_{lambda, m} on a square grid");
  int m_plus = 0;
  int m_minus = 0;
  double half_width = 8.0;
  double spacing = 0.25;
  eigenfunction->add_option("--lambda1", lambda1, "lambda1")->capture_default_str();
  eigenfunction->add_option("--lambda2", lambda2, "lambda2 (nonzero)")->required();
  eigenfunction->add_option("--m-plus", m_plus, "m_plus")->check(CLI::Range(0, 200))->capture_default_str();
  eigenfunction->add_option("--m-minus", m_minus, "m_minus")->check(CLI::Range(0, 200))->capture_default_str();
  eigenfunction->add_option("--half-width", half_width, "Grid spans [-R, R]^2")->capture_default_str();
  eigenfunction->add_option("--spacing", spacing, "Grid spacing (must divide R)")->capture_default_str();

  auto* heat = app.add_subcommand("heat-kernel", "Heat kernel of the oscillator at one pair of points");
  double t = 1.0;
  std::string at;
  std::string kernel = "kappa";
  heat->add_option("--t", t, "Time")->required();
  heat->add_option("--lambda1", lambda1, "lambda1")->capture_default_str();
  heat->add_option("--lambda2", lambda2, "lambda2 (nonzero)")->required();
  heat->add_option("--at", at, "u1,u2,v1,v2")->required();
  heat->add_option("--kernel", kernel, "kappa (pi picture) or q_rho (rho picture)")
      ->check(CLI::IsMember({"kappa", "q_rho"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify-orbit", "Canonical coadjoint-orbit representative");
  std::string omega_text;
  std::string lambda_text;
  classify->add_option("--omega", omega_text, "a,b,c,d on X1,Y1,X2,Y2")->required();
  classify->add_option("--lambda", lambda_text, "l1,l2 on T1,T2")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 if any check fails");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites, "Suite name(s); default all")
      ->check(CLI::IsMember(std::vector<std::string>(hosc::verify::kSuites.begin(), hosc::verify::kSuites.end())));
  verify->add_option("--lambda1", lambda1, "lambda1")->capture_default_str();
  verify->add_option("--lambda2", lambda2, "lambda2 (nonzero)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) {
      require_nonzero_lambda2(lambda2);
      const auto pairs = hosc::enumerate_spectrum(hosc::Lambda(lambda1, lambda2), count);
      if (format == "csv") {
        std::string text = "m_plus,m_minus,nu\n";
        char line[96];
        for (const auto& p : pairs) {
          std::snprintf(line, sizeof line, "%d,%d,%.17g\n", p.mode.m_plus, p.mode.m_minus, p.eigenvalue);
          text += line;
        }
        emit(text, out_path);
        return 0;
      }
      Json rows = Json::array();
      for (const auto& p : pairs)
        rows.push_back(Json{{"m_plus", p.mode.m_plus}, {"m_minus", p.mode.m_minus}, {"nu", p.eigenvalue}});
      Json params{{"lambda1", lambda1}, {"lambda2", lambda2}, {"count", count}};
      emit(hosc::cli::write_json(report("spectrum", params, Json{{"rows", rows}})), out_path);
      return 0;
    }

    if (eigenfunction->parsed()) {
      require_nonzero_lambda2(lambda2);
      const hosc::Lambda lambda(lambda1, lambda2);
      const hosc::ModeIndex mode(m_plus, m_minus);
      const hosc::Axis axis = hosc::Axis::from_extent(half_width, spacing);
      const auto g = hosc::eigenfunction_grid(lambda, mode, axis, axis);
      Json params{{"lambda1", lambda1}, {"lambda2", lambda2}, {"m_plus", m_plus},
                  {"m_minus", m_minus}, {"half_width", half_width}, {"spacing", spacing}};
      Json results{{"eigenvalue", hosc::eigenvalue(lambda, mode)}, {"grid_norm", g.norm()}, {"grid", grid_json(g)}};
      emit(hosc::cli::write_json(report("eigenfunction", params, results)), out_path);
      return 0;
    }

    if (heat->parsed()) {
      require_nonzero_lambda2(lambda2);
      const auto p = parse_list(at, 4, "--at");
      const hosc::Lambda lambda(lambda1, lambda2);
      const Eigen::Vector2d u(p[0], p[1]);
      const Eigen::Vector2d v(p[2], p[3]);
      Json params{{"t", t}, {"lambda1", lambda1}, {"lambda2", lambda2}, {"at", p}, {"kernel", kernel}};
      Json results;
      if (kernel == "kappa") {
        results["value"] = hosc::kernels::kernel_kappa(lambda, t, u, v);
      } else {
        const auto q = hosc::kernels::kernel_q_rho(lambda, t, u, v);
        results["value_real"] = q.value.real();
        results["value_imag"] = q.value.imag();
        results["boundary_ratio"] = q.boundary_ratio;
        results["accuracy_warning"] = q.accuracy_warning;
      }
      emit(hosc::cli::write_json(report("heat-kernel", params, results)), out_path);
      return 0;
    }

    if (classify->parsed()) {
      const auto w = parse_list(omega_text, 4, "--omega");
      const auto l = parse_list(lambda_text, 2, "--lambda");
      hosc::group::LinearForm ell;
      std::copy(w.begin(), w.end(), ell.omega.begin());
      std::copy(l.begin(), l.end(), ell.lambda.begin());
      const auto rep = hosc::group::classify_orbit(ell);
      Json params{{"omega", w}, {"lambda", l}};
      Json results{{"kind", hosc::group::to_string(rep.kind)},
                   {"omega", std::vector<double>(rep.form.omega.begin(), rep.form.omega.end())},
                   {"lambda", std::vector<double>(rep.form.lambda.begin(), rep.form.lambda.end())}};
      emit(hosc::cli::write_json(report("classify-orbit", params, results)), out_path);
      return 0;
    }

    if (verify->parsed()) {
      if (suites.empty()) suites.assign(hosc::verify::kSuites.begin(), hosc::verify::kSuites.end());
      require_nonzero_lambda2(lambda2);
      const hosc::verify::SuiteOptions options{lambda1, lambda2};
      Json checks = Json::array();
      Json summary;
      bool all = true;
      for (const auto& s : suites) {
        const auto result = hosc::verify::run_suite(s, options);
        bool suite_pass = true;
        for (const auto& c : result) {
          checks.push_back(Json{{"name", s + "." + c.name},
                                {"pass", c.pass},
                                {"measured", c.measured},
                                {"tolerance", c.tolerance}});
          suite_pass = suite_pass && c.pass;
        }
        summary[s] = suite_pass ? "pass" : "fail";
        all = all && suite_pass;
      }
      Json params{{"suites", suites}, {"lambda1", lambda1}, {"lambda2", lambda2}};
      Json results{{"all_pass", all}, {"suites", summary}};
      emit(hosc::cli::write_json(report("verify", params, results, checks)), out_path);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hosc::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
