#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "noneq/density_matrix.hpp"
#include "noneq/level_system.hpp"
#include "noneq/pulse.hpp"
#include "noneq/signal.hpp"

namespace noneq::response {

// Nonequilibrium: state prepared at tau0 = t0, one-sided field transform.
// Stationary: tau0 -> -infinity, full transform; requires a diagonal state.
enum class Preparation { Nonequilibrium, Stationary };

// <<I| V_L G(w) V_- |ab>> for unit weight,
// sum_c V_ca [V_bc / (w - w_cb + i eta) - V_bc / (w - w_ac + i eta)]
cplx correlation_linear_pair(const LevelSystem& s, std::size_t a,
                             std::size_t b, double w, double eta);

// sum_ab rho_ab <<I| V_L G(w) V_- |ab>>
cplx matter_correlation_linear(const LevelSystem& s, const DensityMatrix& rho,
                               double w, double eta);

// One term of the generalized susceptibility: weight multiplies
// delta(w - w1' - w_ab); detuning is that delta argument.
struct Chi1Component {
  std::size_t a, b;
  cplx weight;
  double support;   // w1' = w - w_ab where the delta fires
  double detuning;  // w - w1' - w_ab for the requested w1'
};

std::vector<Chi1Component> chi1_generalized(const LevelSystem& s,
                                            const DensityMatrix& rho, double w,
                                            double w1p, double eta);

// (i / 2 pi) sum_ab rho_ab <<I| V_L G(w) V_- [G(w - w1') - G^+(w - w1')] |ab>>
// through explicit Liouville superoperators; a Lorentzian of width eta in
// w - w1' - w_ab around each delta support
cplx chi1_ggdag(const LevelSystem& s, const DensityMatrix& rho, double w,
                double w1p, double eta);

struct LinearSignal {
  SignalTrace pop;
  SignalTrace coh;
  SignalTrace total;
};

LinearSignal linear_signal(const LevelSystem& s, const DensityMatrix& rho,
                           const fields::ChirpedGaussianPulse& pulse,
                           const std::vector<double>& grid, double eta,
                           Preparation prep = Preparation::Nonequilibrium);

struct ThreeLevelSignal {
  std::map<std::pair<std::size_t, std::size_t>, SignalTrace> terms;
  SignalTrace total;
};

// RWA form for a lambda system (two lower states coupled to the top one)
ThreeLevelSignal linear_signal_threelevel_rwa(
    const LevelSystem& s, const DensityMatrix& rho,
    const fields::ChirpedGaussianPulse& pulse, const std::vector<double>& grid,
    double eta);

// index of the upper level; throws ConfigurationError unless the system is a
// three-level lambda with only (lower, upper) dipoles
std::size_t check_lambda_topology(const LevelSystem& s);

// frequency-integrated CW signal
double cw_integrated_signal(const LevelSystem& s, const DensityMatrix& rho,
                            const fields::CWField& cw, double eta);

struct OracleOptions {
  double tolerance = 1e-10;  // relative, per quadrature
  double tau_span = 6.0;     // field window in units of T_p
  double s_decay = 40.0;     // propagator cut at s_decay / eta
  double t0_minus_tau0 = 0.0;
  Preparation prep = Preparation::Nonequilibrium;
};

// Direct time-domain quadrature of the first-order signal with eigenstate
// propagators damped as exp(-eta t). Throws NumericalError when a quadrature
// error estimate exceeds the tolerance.
LinearSignal time_domain_oracle(const LevelSystem& s, const DensityMatrix& rho,
                                const fields::ChirpedGaussianPulse& pulse,
                                const std::vector<double>& grid, double eta,
                                const OracleOptions& opt = {});

void check_eta(double eta);

}  // namespace noneq::response
