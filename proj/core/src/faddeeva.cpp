#include "noneq/faddeeva.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "noneq/errors.hpp"

namespace noneq::specfun {

namespace {

constexpr int kWeidemanN = 40;
constexpr double kInvSqrtPi = 0.56418958354775628695;

struct Weideman {
  double L;
  std::array<double, kWeidemanN> a;  // a[n-1] multiplies Z^(n-1)

  Weideman() {
    const int M = 2 * kWeidemanN;
    L = std::sqrt(kWeidemanN / std::numbers::sqrt2);
    std::array<double, 2 * M> f{};
    for (int k = -M + 1; k <= M - 1; ++k) {
      const double t = L * std::tan(0.5 * k * std::numbers::pi / M);
      f[k + M] = std::exp(-t * t) * (L * L + t * t);
    }
    for (int n = 1; n <= kWeidemanN; ++n) {
      double s = 0.0;
      for (int k = -M + 1; k <= M - 1; ++k)
        s += f[k + M] * std::cos(std::numbers::pi * k * n / M);
      a[n - 1] = s / (2.0 * M);
    }
  }

  cplx operator()(cplx z) const {
    const cplx d = L - I * z;
    const cplx Z = (L + I * z) / d;
    cplx p = a[kWeidemanN - 1];
    for (int n = kWeidemanN - 2; n >= 0; --n) p = p * Z + a[n];
    return 2.0 * p / (d * d) + kInvSqrtPi / d;
  }
};

const Weideman& weideman() {
  static const Weideman w;
  return w;
}

// sum_n (i z)^n / Gamma(n/2 + 1)
cplx taylor(cplx z) {
  static const auto inv_gamma = [] {
    std::array<double, 48> g{};
    for (std::size_t n = 0; n < g.size(); ++n)
      g[n] = 1.0 / std::tgamma(0.5 * static_cast<double>(n) + 1.0);
    return g;
  }();
  const cplx iz = I * z;
  cplx term = 1.0;
  cplx sum = 0.0;
  for (double c : inv_gamma) {
    sum += term * c;
    term *= iz;
  }
  return sum;
}

cplx continued_fraction(cplx z) {
  const int depth = std::abs(z) < 50.0 ? 60 : 20;
  cplx t = z;
  for (int k = depth; k >= 1; --k) t = z - (0.5 * k) / t;
  return I * kInvSqrtPi / t;
}

cplx faddeeva_upper(cplx z) {
  const double r = std::abs(z);
  if (r < 0.5) return taylor(z);
  if (r <= 10.0) return weideman()(z);
  return continued_fraction(z);
}

void check_domain(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("faddeeva: non-finite argument");
  if (std::abs(z) >= 1e8) throw DomainError("faddeeva: |z| >= 1e8");
}

}  // namespace

cplx faddeeva(cplx z) {
  check_domain(z);
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

cplx erfi(cplx z) {
  check_domain(z);
  // fold into the first quadrant: Erfi is odd and Erfi(conj z) = conj Erfi(z)
  const bool negate = z.real() < 0.0;
  if (negate) z = -z;
  const bool conjugate = z.imag() < 0.0;
  if (conjugate) z = std::conj(z);

  cplx r;
  if (std::abs(z) <= 1.0) {
    // (2/sqrt(pi)) sum z^(2k+1) / (k! (2k+1))
    const cplx z2 = z * z;
    cplx term = z;
    cplx sum = 0.0;
    for (int k = 0; k < 40; ++k) {
      const cplx add = term / static_cast<double>(2 * k + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
      term *= z2 / static_cast<double>(k + 1);
    }
    r = 2.0 * kInvSqrtPi * sum;
  } else {
    r = I * (1.0 - std::exp(z * z) * faddeeva_upper(z));
  }
  if (z.imag() == 0.0) r.imag(0.0);
  if (z.real() == 0.0) r.real(0.0);
  if (conjugate) r = std::conj(r);
  return negate ? -r : r;
}

}  // namespace noneq::specfun
