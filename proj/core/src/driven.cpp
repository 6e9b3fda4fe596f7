#include "noneq/driven.hpp"

#include <cmath>
#include <string>

#include "noneq/errors.hpp"
#include "noneq/response.hpp"

namespace noneq::driven {

void DrivenSystem::validate() const {
  if (system.size() != 3)
    throw ConfigurationError("driven system needs exactly 3 levels");
  if (!(system.energy(0) <= system.energy(1) &&
        system.energy(1) < system.energy(2)))
    throw ConfigurationError("driven system levels must be ordered a <= b < c");
  if (!(rabi >= 0.0) || !(drive >= 0.0))
    throw ConfigurationError("Omega and omega0 must be >= 0");
  for (double g : {gamma_ba, gamma_ca, gamma_cb})
    if (!(g >= 0.0) || !std::isfinite(g))
      throw ConfigurationError("decay rates must be finite and >= 0");
  const CMatrix& mu = system.dipole_lowering();
  if (mu(0, 1) != cplx{})
    throw ConfigurationError("probe dipole may not couple a and b");
}

DrivenSystem DrivenSystem::with_drive(double Omega, double omega0) const {
  DrivenSystem d = *this;
  d.rabi = Omega;
  d.drive = omega0;
  return d;
}

DrivenSystem make_driven(const LevelSystem& s, double Omega, double omega0) {
  DrivenSystem d{s, Omega, omega0, s.decay_rate(1, 0), s.decay_rate(2, 0),
                 s.decay_rate(2, 1)};
  d.validate();
  return d;
}

Rates rates(const DrivenSystem& d) {
  d.validate();
  Rates r{d.gamma_ba, d.gamma_ca, d.gamma_cb, 0.0, 0.0, 0.0};
  if (!d.detailed_balance) return r;
  const bool any = r.ba > 0.0 || r.ca > 0.0 || r.cb > 0.0;
  if (!d.system.temperature()) {
    if (any)
      throw ConfigurationError(
          "detailed-balance upward rates need a temperature");
    return r;
  }
  const double kT = *d.system.temperature();
  const double wba = bohr_frequency(d.system, 1, 0);
  const double wca = bohr_frequency(d.system, 2, 0);
  const double wcb = bohr_frequency(d.system, 2, 1);
  r.ab = r.ba * std::exp(-wba / kT);
  r.ac = r.ca * std::exp(-wca / kT);
  r.bc = r.cb * std::exp(-wcb / kT);
  return r;
}

Liouvillian build_liouvillian(const DrivenSystem& d) {
  const Rates g = rates(d);
  const double W = d.rabi;
  const double wba = bohr_frequency(d.system, 1, 0);
  const double wca = bohr_frequency(d.system, 2, 0);
  const double wbc = bohr_frequency(d.system, 1, 2);
  const double dab = d.drive - wba;
  const double dac = d.drive - wca;

  Matrix9 L = Matrix9::Zero();
  // populations
  L(AA, BA) += I * W;
  L(AA, AB) += -I * W;
  L(AA, AA) += -(g.ab + g.ac);
  L(AA, BB) += g.ba;
  L(AA, CC) += g.ca;
  L(BB, BA) += -I * W;
  L(BB, AB) += I * W;
  L(BB, BB) += -(g.ba + g.bc);
  L(BB, AA) += g.ab;
  L(BB, CC) += g.cb;
  L(CC, AA) += g.ac;
  L(CC, BB) += g.bc;
  L(CC, CC) += -(g.ca + g.cb);
  // a-b coherence
  const double g_ab = 0.5 * (g.ab + g.ba + g.ac + g.bc);
  L(AB, AB) += -I * dab - g_ab;
  L(AB, BB) += I * W;
  L(AB, AA) += -I * W;
  L(BA, BA) += I * dab - g_ab;
  L(BA, BB) += -I * W;
  L(BA, AA) += I * W;
  // a-c coherence
  const double g_ac = 0.5 * (g.ac + g.ca + g.ab + g.cb);
  L(AC, AC) += -I * dac - g_ac;
  L(AC, BC) += I * W;
  L(CA, CA) += I * dac - g_ac;
  L(CA, CB) += -I * W;
  // b-c coherence
  const double g_bc = 0.5 * (g.bc + g.cb + g.ba + g.ca);
  L(BC, BC) += -I * wbc - g_bc;
  L(BC, AC) += I * W;
  L(CB, CB) += I * wbc - g_bc;
  L(CB, CA) += -I * W;
  return {L, dab, dac, d.drive, g};
}

std::size_t kernel_dimension(const Liouvillian& L, double rel_tol) {
  Eigen::JacobiSVD<Matrix9> svd(L.matrix);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return 9;
  std::size_t k = 0;
  for (int i = 0; i < 9; ++i)
    if (sv(i) <= rel_tol * smax) ++k;
  return k;
}

DensityMatrix steady_state(const Liouvillian& L) {
  const std::size_t kdim = kernel_dimension(L);
  if (kdim != 1)
    throw DegeneracyError("steady state: Liouvillian kernel has dimension " +
                              std::to_string(kdim),
                          kdim);
  Matrix9 A = L.matrix;
  Vector9 rhs = Vector9::Zero();
  A.row(0).setZero();
  A(0, AA) = A(0, BB) = A(0, CC) = 1.0;
  rhs(0) = 1.0;
  const Vector9 x = A.fullPivLu().solve(rhs);
  const double res = (L.matrix * x).norm();
  if (!(res <= 1e-10))
    throw NumericalError("steady state residual " + std::to_string(res) +
                         " exceeds 1e-10");
  CMatrix m(3, 3);
  m << x(AA), x(AB), x(AC), x(BA), x(BB), x(BC), x(CA), x(CB), x(CC);
  // symmetrize away rounding before the invariant check
  m = 0.5 * (m + m.adjoint()).eval();
  for (int i = 0; i < 3; ++i) m(i, i) = m(i, i).real();
  m /= m.trace().real();
  return DensityMatrix(m);
}

RotatingPropagator::RotatingPropagator(const Liouvillian& L) : L_(L.matrix) {
  Eigen::ComplexEigenSolver<Matrix9> es(L_);
  if (es.info() == Eigen::Success) {
    lambda_ = es.eigenvalues();
    V_ = es.eigenvectors();
    Eigen::JacobiSVD<Matrix9> svd(V_);
    const auto& sv = svd.singularValues();
    cond_ = sv(8) > 0.0 ? sv(0) / sv(8) : INFINITY;
    if (cond_ <= max_condition) {
      Vinv_ = V_.inverse();
      eigen_ = true;
    }
  }
}

Matrix9 RotatingPropagator::operator()(double w, double eta) const {
  if (!eigen_) return rotating_propagator(Liouvillian{L_, 0, 0, 0, {}}, w, eta);
  Vector9 d;
  for (int k = 0; k < 9; ++k) {
    const cplx den = cplx{w, eta} - I * lambda_(k);
    if (std::abs(den) == 0.0)
      throw SingularityError("rotating propagator: resolvent is singular");
    d(k) = 1.0 / den;
  }
  return V_ * d.asDiagonal() * Vinv_;
}

cplx RotatingPropagator::element(int kl, int mn, double w, double eta) const {
  if (!eigen_) return (*this)(w, eta)(kl, mn);
  cplx sum = 0.0;
  for (int k = 0; k < 9; ++k) {
    const cplx den = cplx{w, eta} - I * lambda_(k);
    if (std::abs(den) == 0.0)
      throw SingularityError("rotating propagator: resolvent is singular");
    sum += V_(kl, k) * Vinv_(k, mn) / den;
  }
  return sum;
}

Matrix9 rotating_propagator(const Liouvillian& L, double w, double eta) {
  if (eta < 0.0) throw ArgumentError("eta must be >= 0");
  const Matrix9 A = cplx{w, eta} * Matrix9::Identity() - I * L.matrix;
  Eigen::FullPivLU<Matrix9> lu(A);
  lu.setThreshold(1e-14);
  if (!lu.isInvertible())
    throw SingularityError("rotating propagator: resolvent is singular at w=" +
                           std::to_string(w));
  return lu.inverse();
}

Matrix9 frame_transform(double t, double omega0) {
  Vector9 d = Vector9::Ones();
  const cplx p = std::exp(cplx{0.0, omega0 * t});
  d(AB) = p;
  d(BA) = std::conj(p);
  d(AC) = p;
  d(CA) = std::conj(p);
  return d.asDiagonal();
}

DrivenSignal driven_signal(const DrivenSystem& d,
                           const fields::ChirpedGaussianPulse& pulse,
                           const std::vector<double>& grid, double eta) {
  check_grid(grid);
  if (eta < 0.0) throw ArgumentError("eta must be >= 0");
  const Liouvillian L = build_liouvillian(d);
  DensityMatrix rho = steady_state(L);
  const RotatingPropagator G(L);
  const CMatrix& v = d.system.total_dipole();
  const cplx mac = v(0, 2), mca = v(2, 0), mbc = v(1, 2), mcb = v(2, 1);
  const double w0 = d.drive;
  const double paa = rho(0, 0).real() - rho(2, 2).real();
  const double pbb = rho(1, 1).real() - rho(2, 2).real();
  const cplx rab = rho(0, 1), rba = rho(1, 0);

  DrivenSignal out{SignalTrace(grid, "pop", eta), SignalTrace(grid, "coh", eta),
                   SignalTrace(grid, "total", eta), rho};
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double w = grid[q];
    const cplx ec = std::conj(pulse.spectral_envelope(w));
    const cplx e0 = pulse.spectral_envelope(w);
    const cplx ep = pulse.spectral_envelope(w + w0);
    const cplx em = pulse.spectral_envelope(w - w0);
    const Matrix9 Gw = G(w, eta);
    const Matrix9 Gm = G(w - w0, eta);
    const double pop =
        2.0 * paa *
            std::imag(ec * (e0 * mac * mca * Gm(CA, CA) +
                            ep * mbc * mca * Gw(CB, CA))) +
        2.0 * pbb *
            std::imag(ec * (e0 * mbc * mcb * Gw(CB, CB) +
                            em * mac * mcb * Gm(CA, CB)));
    const double coh = 2.0 * std::imag(
        ec * ((ep * mbc * mca * Gw(CB, CB) + e0 * mac * mca * Gm(CA, CB)) * rab +
              (em * mac * mcb * Gm(CA, CA) + e0 * mbc * mcb * Gw(CB, CA)) * rba));
    out.pop.values[q] = pop;
    out.coh.values[q] = coh;
    out.total.values[q] = pop + coh;
  }
  return out;
}

DressedSpectrum dressed_frequencies(const DrivenSystem& d) {
  d.validate();
  const double wba = bohr_frequency(d.system, 1, 0);
  const double wca = bohr_frequency(d.system, 2, 0);
  const double wcb = bohr_frequency(d.system, 2, 1);
  const double delta = d.drive - wba;
  const double rp = std::sqrt(4.0 * d.rabi * d.rabi + delta * delta);
  const double mid = 0.5 * (d.system.energy(0) + d.system.energy(1));
  const double half = 0.5 * std::sqrt(4.0 * d.rabi * d.rabi + wba * wba);
  return {delta,
          rp,
          {wca + 0.5 * (delta + rp), wca + 0.5 * (delta - rp),
           wcb - 0.5 * (delta + rp), wcb - 0.5 * (delta - rp)},
          mid - half,
          mid + half};
}

SignalTrace driven_equilibrium_signal(const DrivenSystem& d,
                                      const fields::ChirpedGaussianPulse& pulse,
                                      const std::vector<double>& grid,
                                      double eta) {
  if (d.rabi != 0.0 || d.drive != 0.0)
    throw ArgumentError("equilibrium signal requires Omega = omega0 = 0");
  check_grid(grid);
  const Liouvillian L = build_liouvillian(d);
  const DensityMatrix rho = steady_state(L);
  const RotatingPropagator G(L);
  const CMatrix& v = d.system.total_dipole();
  SignalTrace out(grid, "eq", eta);
  const double rcc = rho(2, 2).real();
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double w = grid[q];
    const double pw = std::norm(pulse.spectral_envelope(w));
    cplx acc = (rho(0, 0).real() - rcc) * v(0, 2) * v(2, 0) *
                   G.element(CA, CA, w, eta) +
               (rho(1, 1).real() - rcc) * v(1, 2) * v(2, 1) *
                   G.element(CB, CB, w, eta);
    out.values[q] = 2.0 * std::imag(pw * acc);
  }
  return out;
}

}  // namespace noneq::driven
