#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace hosc::verify {

struct Check {
  std::string name;
  bool pass;
  double measured;
  double tolerance;
};

/// measured <= tolerance (NaN fails).
Check upper_bound(std::string name, double measured, double tolerance);

struct SuiteOptions {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

inline constexpr std::array<std::string_view, 7> kSuites{
    "hermite", "quadform", "eigenresidual", "intertwiner", "mehler", "fd", "spectralres"};

/// Runs one named suite; InvalidParameter for an unknown name.
std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& options);

}  // namespace hosc::verify
