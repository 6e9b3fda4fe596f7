#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "noneq/errors.hpp"
#include "noneq/response.hpp"

namespace noneq::response {

namespace {

using boost::math::quadrature::gauss_kronrod;

void require(double err, cplx value, double tol, const char* what, double w) {
  const double bound = tol * std::abs(value) + 1e-300;
  if (!(err <= bound) && err > 1e-14)
    throw NumericalError(std::string("time-domain oracle: ") + what +
                         " quadrature did not converge at w=" +
                         std::to_string(w) + " (error estimate " +
                         std::to_string(err) + ")");
}

// int_0^smax exp(i nu s - eta s) ds on panels of a quarter oscillation (the
// Gauss-Kronrod error estimate is the G7/K15 difference, which is pessimistic)
cplx propagator_integral(double nu, double eta, double smax, double tol,
                         double w) {
  const double rate = std::max({std::abs(nu), eta, 1e-3});
  const double h = 0.5 * std::numbers::pi / rate;
  const auto panels = static_cast<std::size_t>(std::ceil(smax / h));
  const double step = smax / static_cast<double>(panels);
  auto f = [nu, eta](double s) { return std::exp(cplx{-eta * s, nu * s}); };
  cplx sum = 0.0;
  double err = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    double e = 0.0;
    const double lo = step * static_cast<double>(p);
    sum += gauss_kronrod<double, 15>::integrate(f, lo, lo + step, 0, 0.0, &e);
    err += e;
  }
  require(err, sum, tol, "propagator", w);
  return sum;
}

}  // namespace

LinearSignal time_domain_oracle(const LevelSystem& s, const DensityMatrix& rho,
                                const fields::ChirpedGaussianPulse& pulse,
                                const std::vector<double>& grid, double eta,
                                const OracleOptions& opt) {
  check_eta(eta);
  check_grid(grid);
  check_compatible(s, rho.matrix());
  const bool stationary = opt.prep == Preparation::Stationary;
  if (stationary && !rho.is_diagonal())
    throw ArgumentError(
        "stationary preparation requires a diagonal (stationary) state");

  const std::size_t n = s.size();
  const CMatrix& v = s.total_dipole();
  const double d = opt.t0_minus_tau0;
  const double span = opt.tau_span * pulse.duration();
  const double tau_lo = stationary ? d - span : std::max(0.0, d - span);
  const double tau_hi = d + span;
  const double smax = opt.s_decay / eta;

  LinearSignal out{SignalTrace(grid, "pop", eta), SignalTrace(grid, "coh", eta),
                   SignalTrace(grid, "total", eta)};

  for (std::size_t iw = 0; iw < grid.size(); ++iw) {
    const double w = grid[iw];
    // K_kl = int_0^smax exp(i (w - w_kl) s - eta s) ds
    CMatrix K(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        K(k, l) = propagator_integral(w - bohr_frequency(s, k, l), eta, smax,
                                      opt.tolerance, w);
    const cplx det = std::conj(pulse.spectral_envelope(w)) *
                     std::exp(cplx{0.0, -w * d});
    double pop = 0.0, coh = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const cplx r = rho(a, b);
        if (r == cplx{}) continue;
        const double wab = bohr_frequency(s, a, b);
        // first interaction: field times freely evolving rho_ab(tau)
        auto f = [&](double tau) {
          return std::exp(cplx{0.0, (w - wab) * tau}) *
                 pulse.temporal_envelope(tau - d);
        };
        double err = 0.0;
        const cplx J = gauss_kronrod<double, 31>::integrate(
            f, tau_lo, tau_hi, 15, opt.tolerance, &err);
        require(err, J, 1e3 * opt.tolerance, "field", w);
        // Tr(V G(s) [V, |a><b|]) summed over the propagated elements
        cplx m = 0.0;
        for (std::size_t k = 0; k < n; ++k) m += v(b, k) * v(k, a) * K(k, b);
        for (std::size_t l = 0; l < n; ++l) m -= v(l, a) * v(b, l) * K(a, l);
        const double val = 2.0 * std::imag(-I * det * r * J * m);
        (a == b ? pop : coh) += val;
      }
    out.pop.values[iw] = pop;
    out.coh.values[iw] = coh;
    out.total.values[iw] = pop + coh;
  }
  return out;
}

}  // namespace noneq::response
