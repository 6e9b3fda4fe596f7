#include "noneq/response.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "noneq/errors.hpp"
#include "noneq/liouville.hpp"

namespace noneq::response {

void check_eta(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw ArgumentError("eta must be > 0");
}

cplx correlation_linear_pair(const LevelSystem& s, std::size_t a,
                             std::size_t b, double w, double eta) {
  const CMatrix& v = s.total_dipole();
  cplx sum = 0.0;
  for (std::size_t c = 0; c < s.size(); ++c) {
    const cplx num = v(c, a) * v(b, c);
    if (num == cplx{}) continue;
    sum += num * (1.0 / (w - bohr_frequency(s, c, b) + I * eta) -
                  1.0 / (w - bohr_frequency(s, a, c) + I * eta));
  }
  return sum;
}

cplx matter_correlation_linear(const LevelSystem& s, const DensityMatrix& rho,
                               double w, double eta) {
  check_eta(eta);
  check_compatible(s, rho.matrix());
  cplx sum = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (rho(a, b) != cplx{})
        sum += rho(a, b) * correlation_linear_pair(s, a, b, w, eta);
  return sum;
}

std::vector<Chi1Component> chi1_generalized(const LevelSystem& s,
                                            const DensityMatrix& rho, double w,
                                            double w1p, double eta) {
  check_eta(eta);
  check_compatible(s, rho.matrix());
  std::vector<Chi1Component> out;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (rho(a, b) == cplx{}) continue;
      const double wab = bohr_frequency(s, a, b);
      out.push_back({a, b, rho(a, b) * correlation_linear_pair(s, a, b, w, eta),
                     w - wab, w - w1p - wab});
    }
  return out;
}

cplx chi1_ggdag(const LevelSystem& s, const DensityMatrix& rho, double w,
                double w1p, double eta) {
  check_eta(eta);
  check_compatible(s, rho.matrix());
  const LiouvilleIndex idx(s.size());
  const CMatrix& v = s.total_dipole();
  const CVector r = idx.vectorize(rho.matrix());
  const cplx d = w - w1p;
  const CVector x = liouville::free_propagator(idx, s, d, eta) * r -
                    liouville::free_propagator(idx, s, d, eta, true) * r;
  const CVector y = liouville::free_propagator(idx, s, w, eta) *
                    (liouville::commutator(idx, v) * x);
  const cplx tr = (liouville::trace_bra(idx) * (liouville::left(idx, v) * y))(0);
  return I / (2.0 * std::numbers::pi) * tr;
}

LinearSignal linear_signal(const LevelSystem& s, const DensityMatrix& rho,
                           const fields::ChirpedGaussianPulse& pulse,
                           const std::vector<double>& grid, double eta,
                           Preparation prep) {
  check_eta(eta);
  check_grid(grid);
  check_compatible(s, rho.matrix());
  if (prep == Preparation::Stationary && !rho.is_diagonal())
    throw ArgumentError(
        "stationary preparation requires a diagonal (stationary) state");
  LinearSignal out{SignalTrace(grid, "pop", eta), SignalTrace(grid, "coh", eta),
                   SignalTrace(grid, "total", eta)};
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double w = grid[i];
    const cplx ec = std::conj(pulse.spectral_envelope(w));
    double pop = 0.0, coh = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const cplx r = rho(a, b);
        if (r == cplx{}) continue;
        const double shifted = w - bohr_frequency(s, a, b);
        const cplx f = prep == Preparation::Stationary
                           ? pulse.spectral_envelope(shifted)
                           : pulse.one_sided_spectrum(shifted);
        const double val =
            2.0 * std::imag(ec * f * r * correlation_linear_pair(s, a, b, w, eta));
        (a == b ? pop : coh) += val;
      }
    out.pop.values[i] = pop;
    out.coh.values[i] = coh;
    out.total.values[i] = pop + coh;
  }
  return out;
}

std::size_t check_lambda_topology(const LevelSystem& s) {
  if (s.size() != 3)
    throw ConfigurationError("three-level form needs exactly 3 levels");
  std::size_t top = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (s.energy(i) > s.energy(top)) top = i;
  const CMatrix& mu = s.dipole_lowering();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (mu(i, j) != cplx{} && j != top)
        throw ConfigurationError(
            "three-level form allows only lower -> upper dipoles");
  for (std::size_t i = 0; i < 3; ++i)
    if (i != top && mu(i, top) == cplx{})
      throw ConfigurationError(
          "three-level form needs both lower states coupled to the upper one");
  return top;
}

ThreeLevelSignal linear_signal_threelevel_rwa(
    const LevelSystem& s, const DensityMatrix& rho,
    const fields::ChirpedGaussianPulse& pulse, const std::vector<double>& grid,
    double eta) {
  check_eta(eta);
  check_grid(grid);
  check_compatible(s, rho.matrix());
  const std::size_t c = check_lambda_topology(s);
  const CMatrix& mu = s.dipole_lowering();
  ThreeLevelSignal out;
  out.total = SignalTrace(grid, "total", eta);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == c || j == c) continue;
      SignalTrace t(grid, s.label(i) + s.label(j), eta);
      const cplx num = std::conj(mu(i, c)) * mu(j, c) * rho(i, j);
      const double wij = bohr_frequency(s, i, j);
      const double wcj = bohr_frequency(s, c, j);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double w = grid[k];
        const cplx val = std::conj(pulse.spectral_envelope(w)) *
                         pulse.one_sided_spectrum(w - wij) * num /
                         (w - wcj + I * eta);
        t.values[k] = 2.0 * val.imag();
        out.total.values[k] += t.values[k];
      }
      out.terms.emplace(std::make_pair(i, j), std::move(t));
    }
  return out;
}

double cw_integrated_signal(const LevelSystem& s, const DensityMatrix& rho,
                            const fields::CWField& cw, double eta) {
  check_eta(eta);
  check_compatible(s, rho.matrix());
  const auto m = fields::cw_spectrum(cw);
  const double pow = std::norm(m.amplitude);
  double sum = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (rho(a, b) == cplx{}) continue;
      const cplx gab = 1.0 / (-bohr_frequency(s, a, b) + I * eta);
      sum += 2.0 * std::imag(I * pow * rho(a, b) *
                             correlation_linear_pair(s, a, b, m.frequency, eta) *
                             gab);
    }
  return sum;
}

}  // namespace noneq::response
