#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "noneq/level_system.hpp"

namespace noneq {

// 1D spectrum omega -> real signal (arbitrary units)
struct SignalTrace {
  std::vector<double> omega;
  std::vector<double> values;
  std::string scenario;
  double eta = 0.0;
  std::string component;  // pop, coh, total, eq, a1..a4, ...

  SignalTrace() = default;
  SignalTrace(std::vector<double> grid, std::string component,
              double eta = 0.0);

  std::size_t size() const { return omega.size(); }
  // throws ArgumentError on unsorted/duplicate grid or non-finite values
  void validate() const;
  double max_abs() const;
};

std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

// 2001 points over [min w_ci - 20 eta, max w_ci + 20 eta] for the dipole
// allowed transitions of the system
std::vector<double> default_grid(const LevelSystem& s, double eta,
                                 std::size_t points = 2001);

void check_grid(const std::vector<double>& grid);

SignalTrace operator+(const SignalTrace& a, const SignalTrace& b);

}  // namespace noneq
