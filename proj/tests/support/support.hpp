#pragma once

#include <array>
#include <chrono>
#include <complex>
#include <cstddef>
#include <vector>

#include "noneq/pulse.hpp"
#include "noneq/signal.hpp"

namespace noneq::testing {

struct Peak {
  std::size_t index;
  double omega;
  double value;
};

// Local maxima of |values| above rel_threshold * max|values|, strongest first.
std::vector<Peak> find_peaks(const std::vector<double>& omega,
                             const std::vector<double>& values,
                             double rel_threshold = 0.05);
std::vector<Peak> find_peaks(const SignalTrace& t, double rel_threshold = 0.05);

// number of interior local extrema whose swing exceeds rel * (max - min)
std::size_t count_oscillations(const std::vector<double>& v, double rel = 0.02);

double max_abs_in(const SignalTrace& t, double lo, double hi);
double value_at(const SignalTrace& t, double w);  // nearest grid point

struct Lorentzian {
  double amplitude;  // signed, value at the center is amplitude / width
  double center;
  double width;      // half width at half maximum
};

// least-squares fit of sum_k A_k g_k / ((w - c_k)^2 + g_k^2)
std::vector<Lorentzian> fit_lorentzians(const std::vector<double>& omega,
                                        const std::vector<double>& values,
                                        std::vector<Lorentzian> guess);

// Erfi Maclaurin series in long double
std::complex<long double> erfi_series(std::complex<long double> z);

// w(z) = (i / pi) int e^{-t^2} / (z - t) dt, Im z > 0, adaptive quadrature
std::complex<double> faddeeva_quadrature(std::complex<double> z);

// int_0^inf E(t) e^{i w t} dt by adaptive quadrature of the temporal profile
std::complex<double> one_sided_quadrature(
    const fields::ChirpedGaussianPulse& p, double w);
// int E(t) e^{i w t} dt over the whole line
std::complex<double> full_transform_quadrature(
    const fields::ChirpedGaussianPulse& p, double w);

double rel_diff(std::complex<double> a, std::complex<double> b);
double peak_normalized_diff(const std::vector<double>& a,
                            const std::vector<double>& b);

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace noneq::testing
