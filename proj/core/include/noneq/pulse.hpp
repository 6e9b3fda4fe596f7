#pragma once

#include "noneq/types.hpp"

namespace noneq::fields {

// Linearly chirped Gaussian pulse. Internal units: T0 in eV^-1, phi2 in eV^-2.
// The spectral envelope is normalized as the Fourier transform of the
// temporal profile (prefactor sqrt(pi) E0 T0 / 2).
class ChirpedGaussianPulse {
 public:
  ChirpedGaussianPulse(double E0, double T0, double carrier, double phi2 = 0.0,
                       double phi0 = 0.0);
  static ChirpedGaussianPulse from_fs(double E0, double T0_fs, double carrier,
                                      double phi2 = 0.0, double phi0 = 0.0);

  double amplitude() const { return E0_; }
  double T0() const { return T0_; }
  double carrier() const { return wc_; }
  double phi2() const { return phi2_; }
  // accepted but cancels in every signal computed here
  double phi0() const { return phi0_; }

  // 1/Gamma = T0^2 - 2 i phi2
  cplx gamma() const { return gamma_; }
  // chirped duration T_p = T0 sqrt(1 + (2 phi2 / T0^2)^2)
  double duration() const;
  // alpha = 2 phi2 / (T0^4 + 4 phi2^2)
  double chirp_rate() const;
  double instantaneous_frequency(double t) const;

  cplx spectral_envelope(double w) const;
  cplx temporal_envelope(double t) const;
  // int_0^inf E(t) e^{i w t} dt, evaluated as (sqrt(pi) E0 T0 / 4) w(u),
  // u = (w - wc) / (2 sqrt(Gamma)), which equals the Erfi closed form
  cplx one_sided_spectrum(double w) const;

  ChirpedGaussianPulse with_phi2(double phi2) const;
  ChirpedGaussianPulse scaled(double factor) const;

 private:
  double E0_, T0_, wc_, phi2_, phi0_;
  cplx gamma_;
  cplx sqrt_gamma_;
};

// Monochromatic mode. sign = -1 means the mode enters as its conjugate
// (amplitude conj(E), frequency -omega).
struct CWField {
  cplx amplitude;
  double frequency;
  int sign = +1;

  CWField(cplx amp, double w, int s = +1);
};

// Delta-function spectrum 2 pi E delta(w - w1), returned as the pair consumed
// by the collapsed frequency integrals.
struct CWComponent {
  cplx amplitude;
  double frequency;
};

CWComponent cw_spectrum(const CWField& f);

// Broad Gaussian probe sqrt(2 pi / sigma) exp(-(w - wc)^2 / (2 sigma^2))
struct GaussianProbe {
  double sigma;
  double center;

  GaussianProbe(double sigma, double center);
  double operator()(double w) const;
};

}  // namespace noneq::fields
