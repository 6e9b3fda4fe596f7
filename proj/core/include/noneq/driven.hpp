#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "noneq/density_matrix.hpp"
#include "noneq/level_system.hpp"
#include "noneq/pulse.hpp"
#include "noneq/signal.hpp"

namespace noneq::driven {

using Matrix9 = Eigen::Matrix<cplx, 9, 9>;
using Vector9 = Eigen::Matrix<cplx, 9, 1>;

// flat positions in the (aa, bb, cc, ab, ba, ac, ca, bc, cb) ordering
enum Slot : int { AA = 0, BB, CC, AB, BA, AC, CA, BC, CB };

// Three-level lambda system (levels sorted a < b < c) with the a <-> b
// transition driven at frequency omega0 and Rabi frequency Omega.
struct DrivenSystem {
  LevelSystem system;
  double rabi;    // Omega, eV
  double drive;   // omega0, eV
  double gamma_ba, gamma_ca, gamma_cb;  // downward rates, eV
  // upward rates from detailed balance at the system temperature
  bool detailed_balance = true;

  void validate() const;
  DrivenSystem with_drive(double Omega, double omega0) const;
};

// Builds the driven system from a lambda LevelSystem, reading the downward
// rates from its decay list.
DrivenSystem make_driven(const LevelSystem& s, double Omega, double omega0);

struct Rates {
  double ba, ca, cb;  // downward
  double ab, ac, bc;  // upward
};

struct Liouvillian {
  Matrix9 matrix;
  double delta_ab;  // omega0 - omega_ba
  double delta_ac;  // omega0 - omega_ca
  double drive;
  Rates rates;
};

Rates rates(const DrivenSystem& d);
Liouvillian build_liouvillian(const DrivenSystem& d);

// Solves L rho = 0 with the first row replaced by the trace condition.
// Throws DegeneracyError when the kernel of L is not one-dimensional.
DensityMatrix steady_state(const Liouvillian& L);
std::size_t kernel_dimension(const Liouvillian& L, double rel_tol = 1e-12);

// ((w + i eta) I - i L)^-1 evaluated through one eigendecomposition of L;
// per-frequency LU when the eigenvector matrix is ill conditioned.
class RotatingPropagator {
 public:
  static constexpr double max_condition = 1e8;

  explicit RotatingPropagator(const Liouvillian& L);
  Matrix9 operator()(double w, double eta) const;
  // single element G_{kl;mn}
  cplx element(int kl, int mn, double w, double eta) const;
  bool uses_eigenbasis() const { return eigen_; }
  double condition() const { return cond_; }
  const Eigen::Matrix<cplx, 9, 1>& eigenvalues() const { return lambda_; }

 private:
  Matrix9 L_;
  bool eigen_ = false;
  double cond_ = 0.0;
  Eigen::Matrix<cplx, 9, 1> lambda_;
  Matrix9 V_, Vinv_;
};

// direct solve; SingularityError when the resolvent is singular
Matrix9 rotating_propagator(const Liouvillian& L, double w, double eta);

// diag(1, 1, 1, e^{i w0 t}, e^{-i w0 t}, e^{i w0 t}, e^{-i w0 t}, 1, 1)
Matrix9 frame_transform(double t, double omega0);

struct DrivenSignal {
  SignalTrace pop;
  SignalTrace coh;
  SignalTrace total;
  DensityMatrix steady;
};

DrivenSignal driven_signal(const DrivenSystem& d,
                           const fields::ChirpedGaussianPulse& pulse,
                           const std::vector<double>& grid, double eta = 0.0);

struct DressedSpectrum {
  double delta_ab;
  double rabi_prime;
  // w_ca + (Delta +- Omega')/2, w_cb - (Delta +- Omega')/2
  std::array<double, 4> resonances;
  // static-coupling energies (w_a + w_b)/2 -+ sqrt(4 Omega^2 + w_ba^2)/2
  double static_a, static_b;
};

DressedSpectrum dressed_frequencies(const DrivenSystem& d);

// Omega = omega0 = 0 only
SignalTrace driven_equilibrium_signal(const DrivenSystem& d,
                                      const fields::ChirpedGaussianPulse& pulse,
                                      const std::vector<double>& grid,
                                      double eta = 0.0);

}  // namespace noneq::driven
