#include "noneq/pulse.hpp"

#include <cmath>
#include <numbers>

#include "noneq/errors.hpp"
#include "noneq/faddeeva.hpp"
#include "noneq/units.hpp"

namespace noneq::fields {

ChirpedGaussianPulse::ChirpedGaussianPulse(double E0, double T0,
                                           double carrier, double phi2,
                                           double phi0)
    : E0_(E0), T0_(T0), wc_(carrier), phi2_(phi2), phi0_(phi0) {
  if (!(T0 > 0.0) || !std::isfinite(T0))
    throw ArgumentError("pulse T0 must be > 0");
  if (!std::isfinite(E0) || !std::isfinite(carrier) || !std::isfinite(phi2) ||
      !std::isfinite(phi0))
    throw ArgumentError("pulse parameters must be finite");
  gamma_ = 1.0 / cplx{T0 * T0, -2.0 * phi2};
  sqrt_gamma_ = std::sqrt(gamma_);
}

ChirpedGaussianPulse ChirpedGaussianPulse::from_fs(double E0, double T0_fs,
                                                   double carrier, double phi2,
                                                   double phi0) {
  return ChirpedGaussianPulse(E0, units::fs_to_inverse_ev(T0_fs), carrier,
                              phi2, phi0);
}

double ChirpedGaussianPulse::duration() const {
  const double r = 2.0 * phi2_ / (T0_ * T0_);
  return T0_ * std::sqrt(1.0 + r * r);
}

double ChirpedGaussianPulse::chirp_rate() const {
  const double t2 = T0_ * T0_;
  return 2.0 * phi2_ / (t2 * t2 + 4.0 * phi2_ * phi2_);
}

double ChirpedGaussianPulse::instantaneous_frequency(double t) const {
  return wc_ + 2.0 * chirp_rate() * t;
}

cplx ChirpedGaussianPulse::spectral_envelope(double w) const {
  const double x = w - wc_;
  const double pref = std::sqrt(std::numbers::pi) * E0_ * T0_ / 2.0;
  return pref * std::exp(cplx{-x * x * T0_ * T0_ / 4.0, phi2_ * x * x / 2.0});
}

cplx ChirpedGaussianPulse::temporal_envelope(double t) const {
  // sqrt(Gamma / Gamma0) = sqrt(Gamma T0^2)
  const cplx amp = 0.5 * E0_ * std::sqrt(gamma_ * (T0_ * T0_));
  return amp * std::exp(-gamma_ * t * t - I * (wc_ * t));
}

cplx ChirpedGaussianPulse::one_sided_spectrum(double w) const {
  const cplx u = (w - wc_) / (2.0 * sqrt_gamma_);
  const double pref = std::sqrt(std::numbers::pi) * E0_ * T0_ / 4.0;
  return pref * specfun::faddeeva(u);
}

ChirpedGaussianPulse ChirpedGaussianPulse::with_phi2(double phi2) const {
  return ChirpedGaussianPulse(E0_, T0_, wc_, phi2, phi0_);
}

ChirpedGaussianPulse ChirpedGaussianPulse::scaled(double factor) const {
  return ChirpedGaussianPulse(E0_ * factor, T0_, wc_, phi2_, phi0_);
}

CWField::CWField(cplx amp, double w, int s)
    : amplitude(amp), frequency(w), sign(s) {
  if (!(w > 0.0)) throw ArgumentError("CW frequency must be > 0");
  if (s != 1 && s != -1) throw ArgumentError("CW sign must be +1 or -1");
}

CWComponent cw_spectrum(const CWField& f) {
  if (f.sign > 0) return {f.amplitude, f.frequency};
  return {std::conj(f.amplitude), -f.frequency};
}

GaussianProbe::GaussianProbe(double s, double c) : sigma(s), center(c) {
  if (!(s > 0.0)) throw ArgumentError("probe width must be > 0");
}

double GaussianProbe::operator()(double w) const {
  const double x = w - center;
  return std::sqrt(2.0 * std::numbers::pi / sigma) *
         std::exp(-x * x / (2.0 * sigma * sigma));
}

}  // namespace noneq::fields
