#include "noneq/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noneq/errors.hpp"

namespace noneq {

SignalTrace::SignalTrace(std::vector<double> grid, std::string comp,
                         double eta_)
    : omega(std::move(grid)),
      values(omega.size(), 0.0),
      eta(eta_),
      component(std::move(comp)) {}

void SignalTrace::validate() const {
  check_grid(omega);
  if (values.size() != omega.size())
    throw ArgumentError("signal trace size mismatch");
  for (double v : values)
    if (!std::isfinite(v)) throw NumericalError("non-finite signal value");
}

double SignalTrace::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points == 0) throw ArgumentError("grid needs at least one point");
  if (points == 1) return {lo};
  if (!(hi > lo)) throw ArgumentError("grid requires max > min");
  std::vector<double> g(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

std::vector<double> default_grid(const LevelSystem& s, double eta,
                                 std::size_t points) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const auto& mu = s.dipole_lowering();
  for (Eigen::Index i = 0; i < mu.rows(); ++i)
    for (Eigen::Index c = 0; c < mu.cols(); ++c)
      if (mu(i, c) != cplx{}) {
        const double w = s.energy(c) - s.energy(i);
        lo = std::min(lo, w);
        hi = std::max(hi, w);
      }
  if (!std::isfinite(lo))
    throw ConfigurationError("system has no dipole-allowed transition");
  return uniform_grid(lo - 20.0 * eta, hi + 20.0 * eta, points);
}

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw ArgumentError("empty frequency grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw ArgumentError("non-finite grid value");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ArgumentError("grid must be strictly increasing");
  }
}

SignalTrace operator+(const SignalTrace& a, const SignalTrace& b) {
  if (a.omega != b.omega) throw ArgumentError("adding traces on different grids");
  SignalTrace r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

}  // namespace noneq
