#include "support.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace noneq::testing {

using boost::math::quadrature::gauss_kronrod;

std::vector<Peak> find_peaks(const std::vector<double>& omega,
                             const std::vector<double>& values,
                             double rel_threshold) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  std::vector<Peak> out;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const double a = std::abs(values[i]);
    if (a >= std::abs(values[i - 1]) && a > std::abs(values[i + 1]) &&
        a >= rel_threshold * m)
      out.push_back({i, omega[i], values[i]});
  }
  std::sort(out.begin(), out.end(), [](const Peak& x, const Peak& y) {
    return std::abs(x.value) > std::abs(y.value);
  });
  return out;
}

std::vector<Peak> find_peaks(const SignalTrace& t, double rel_threshold) {
  return find_peaks(t.omega, t.values, rel_threshold);
}

std::size_t count_oscillations(const std::vector<double>& v, double rel) {
  if (v.size() < 3) return 0;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double swing = rel * (*hi - *lo);
  // extrema separated by at least `swing` (hysteresis walk)
  std::size_t count = 0;
  double ref = v[0];
  int dir = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (dir >= 0 && v[i] > ref) {
      ref = v[i];
      dir = 1;
    } else if (dir <= 0 && v[i] < ref) {
      ref = v[i];
      dir = -1;
    } else if (std::abs(v[i] - ref) > swing) {
      ++count;
      dir = -dir;
      ref = v[i];
    }
  }
  return count;
}

double max_abs_in(const SignalTrace& t, double lo, double hi) {
  double m = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.omega[i] >= lo && t.omega[i] <= hi)
      m = std::max(m, std::abs(t.values[i]));
  return m;
}

double value_at(const SignalTrace& t, double w) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (std::abs(t.omega[i] - w) < std::abs(t.omega[best] - w)) best = i;
  return t.values[best];
}

namespace {

struct LorentzFunctor {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const std::vector<double>* w;
  const std::vector<double>* y;
  int n_in;

  int inputs() const { return n_in; }
  int values() const { return static_cast<int>(w->size()); }

  int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& r) const {
    for (std::size_t i = 0; i < w->size(); ++i) {
      double model = 0.0;
      for (int k = 0; k < n_in / 3; ++k) {
        const double a = p(3 * k), c = p(3 * k + 1), g = p(3 * k + 2);
        const double x = (*w)[i] - c;
        model += a * g / (x * x + g * g);
      }
      r(static_cast<Eigen::Index>(i)) = model - (*y)[i];
    }
    return 0;
  }
};

}  // namespace

std::vector<Lorentzian> fit_lorentzians(const std::vector<double>& omega,
                                        const std::vector<double>& values,
                                        std::vector<Lorentzian> guess) {
  const int n = static_cast<int>(guess.size()) * 3;
  Eigen::VectorXd p(n);
  for (std::size_t k = 0; k < guess.size(); ++k) {
    p(3 * k) = guess[k].amplitude;
    p(3 * k + 1) = guess[k].center;
    p(3 * k + 2) = guess[k].width;
  }
  LorentzFunctor f{&omega, &values, n};
  Eigen::NumericalDiff<LorentzFunctor> nd(f);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<LorentzFunctor>> lm(nd);
  lm.parameters.maxfev = 20000;
  lm.parameters.xtol = 1e-14;
  lm.parameters.ftol = 1e-14;
  lm.minimize(p);
  for (std::size_t k = 0; k < guess.size(); ++k)
    guess[k] = {p(3 * k), p(3 * k + 1), std::abs(p(3 * k + 2))};
  return guess;
}

std::complex<long double> erfi_series(std::complex<long double> z) {
  const std::complex<long double> z2 = z * z;
  std::complex<long double> term = z, sum = 0.0L;
  for (int k = 0; k < 400; ++k) {
    const auto add = term / static_cast<long double>(2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-22L * std::abs(sum) && k > 5) break;
    term *= z2 / static_cast<long double>(k + 1);
  }
  return sum * (2.0L / std::sqrt(std::numbers::pi_v<long double>));
}

std::complex<double> faddeeva_quadrature(std::complex<double> z) {
  if (!(z.imag() > 0.0))
    throw std::invalid_argument("faddeeva_quadrature needs Im z > 0");
  const double y = z.imag(), x = z.real();
  auto f = [z](double t) { return std::exp(-t * t) / (z - t); };
  // split at the near-pole region so the adaptive rule sees it
  std::vector<double> cuts{-12.0, 12.0};
  for (double c : {x - 10 * y, x - y, x, x + y, x + 10 * y})
    if (c > -12.0 && c < 12.0) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    sum += gauss_kronrod<double, 61>::integrate(f, cuts[i], cuts[i + 1], 15,
                                                1e-13, &err);
  }
  return std::complex<double>(0.0, 1.0 / std::numbers::pi) * sum;
}

std::complex<double> one_sided_quadrature(const fields::ChirpedGaussianPulse& p,
                                          double w) {
  auto f = [&](double t) {
    return p.temporal_envelope(t) * std::exp(std::complex<double>(0.0, w * t));
  };
  double err = 0.0;
  const double hi = 12.0 * p.duration();
  return gauss_kronrod<double, 61>::integrate(f, 0.0, hi, 25, 1e-13, &err);
}

std::complex<double> full_transform_quadrature(
    const fields::ChirpedGaussianPulse& p, double w) {
  auto f = [&](double t) {
    return p.temporal_envelope(t) * std::exp(std::complex<double>(0.0, w * t));
  };
  double err = 0.0;
  const double hi = 12.0 * p.duration();
  return gauss_kronrod<double, 61>::integrate(f, -hi, hi, 25, 1e-13, &err);
}

double rel_diff(std::complex<double> a, std::complex<double> b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double peak_normalized_diff(const std::vector<double>& a,
                            const std::vector<double>& b) {
  double m = 0.0, d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i]));
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return m == 0.0 ? d : d / m;
}

}  // namespace noneq::testing
