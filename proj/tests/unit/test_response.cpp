#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "noneq/errors.hpp"
#include "noneq/liouville.hpp"
#include "noneq/response.hpp"
#include "support.hpp"

using namespace noneq;
using namespace noneq::response;
using fields::ChirpedGaussianPulse;

namespace {

constexpr double eta1 = 0.004;

LevelSystem fig1_system() { return make_lambda_system(0.0, 0.1, 0.8); }
ChirpedGaussianPulse fig1_pulse(double phi2 = 0.0) {
  return ChirpedGaussianPulse::from_fs(1.0, 6.6, 0.5, phi2);
}

LevelSystem two_level(cplx mu) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = mu;
  return LevelSystem({"g", "e"}, {0.0, 1.0}, m);
}

LevelSystem complex_lambda() {
  CMatrix mu = CMatrix::Zero(3, 3);
  mu(0, 2) = cplx(0.6, 0.8);
  mu(1, 2) = cplx(-0.3, 1.1);
  return LevelSystem({"a", "b", "c"}, {0.0, 0.1, 0.8}, mu);
}

}  // namespace

TEST_SUITE("response") {

TEST_CASE("two-level correlation") {
  const auto s = two_level(0.7);
  const auto rho = population_state(s, "g");
  for (double w : {0.3, 0.99, 1.0, 1.7}) {
    const cplx expect = 0.49 * (1.0 / (w - 1.0 + I * eta1) - 1.0 / (w + 1.0 + I * eta1));
    CHECK(testing::rel_diff(matter_correlation_linear(s, rho, w, eta1), expect) < 1e-14);
  }
  const double eta = 1e-5;
  CHECK(matter_correlation_linear(s, rho, 1.0, eta).imag() ==
        doctest::Approx(-0.49 / eta).epsilon(1e-4));
  CHECK(matter_correlation_linear(two_level(0.0), rho, 1.0, eta1) == cplx(0.0));
  CHECK_THROWS_AS(matter_correlation_linear(s, rho, 1.0, 0.0), ArgumentError);
}

TEST_CASE("correlation matches superoperator expansion with complex dipoles") {
  const auto s = complex_lambda();
  const LiouvilleIndex idx(3);
  const CMatrix& v = s.total_dipole();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      CMatrix e = CMatrix::Zero(3, 3);
      e(a, b) = 1.0;
      for (double w : {0.2, 0.75, 0.81}) {
        const CVector y = liouville::free_propagator(idx, s, w, eta1) *
                          (liouville::commutator(idx, v) * idx.vectorize(e));
        const cplx ref = (liouville::trace_bra(idx) * (liouville::left(idx, v) * y))(0);
        CHECK(std::abs(correlation_linear_pair(s, a, b, w, eta1) - ref) <
              1e-12 * (1 + std::abs(ref)));
      }
    }
}

TEST_CASE("generalized chi1 supports") {
  const auto s = fig1_system();
  const auto eq = population_state(s, "a");
  for (const auto& c : chi1_generalized(s, eq, 0.8, 0.7, eta1)) {
    CHECK(c.support == 0.8);
    CHECK(c.detuning == doctest::Approx(0.1));
  }
  const auto coh = maximally_coherent_state(s, "a", "b");
  std::vector<double> supports;
  for (const auto& c : chi1_generalized(s, coh, 0.8, 0.8, eta1)) supports.push_back(c.support);
  std::sort(supports.begin(), supports.end());
  REQUIRE(supports.size() == 4);
  CHECK(supports[0] == doctest::Approx(0.7));
  CHECK(supports[1] == doctest::Approx(0.8));
  CHECK(supports[2] == doctest::Approx(0.8));
  CHECK(supports[3] == doctest::Approx(0.9));
}

TEST_CASE("nascent delta form of chi1") {
  using boost::math::quadrature::gauss_kronrod;
  const auto s = complex_lambda();
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.3;
  m(2, 2) = 0.2;
  m(0, 1) = cplx(0.1, 0.2);
  m(1, 0) = cplx(0.1, -0.2);
  const DensityMatrix rho(m);
  const double eta = 1e-4, w = 0.77;

  std::map<double, cplx> expect;
  for (const auto& c : chi1_generalized(s, rho, w, 0.0, eta))
    expect[std::round(c.support * 1e9) / 1e9] += c.weight;
  std::vector<double> sup;
  for (const auto& e : expect) sup.push_back(e.first);

  // integrate between midpoints of neighbouring supports; x = x0 + eta tan(t)
  // flattens the Lorentzian
  auto window = [&](double x0, double lo, double hi) {
    auto f = [&](double t) {
      const double c = std::cos(t);
      return chi1_ggdag(s, rho, w, x0 + eta * std::tan(t), eta) * (eta / (c * c));
    };
    double err = 0.0;
    return gauss_kronrod<double, 61>::integrate(f, std::atan((lo - x0) / eta),
                                                std::atan((hi - x0) / eta), 12, 1e-10, &err);
  };
  cplx total = 0.0, sum = 0.0;
  for (std::size_t k = 0; k < sup.size(); ++k) {
    const double lo = k == 0 ? -50.0 : 0.5 * (sup[k - 1] + sup[k]);
    const double hi = k + 1 == sup.size() ? 50.0 : 0.5 * (sup[k] + sup[k + 1]);
    const cplx got = window(sup[k], lo, hi);
    CAPTURE(sup[k]);
    CHECK(testing::rel_diff(got, expect[sup[k]]) < 5e-3);
    total += got;
    sum += expect[sup[k]];
  }
  CHECK(testing::rel_diff(total, sum) < 1e-3);
}

TEST_CASE("population peaks of the coherent lambda system") {
  // The one-sided spectrum makes the lines partly dispersive, so extrema of
  // |S| sit within eta of the Bohr frequency rather than on it; lobes of the dispersive part lie
  // within the linewidth 2 eta.
  const auto s = fig1_system();
  const auto grid = uniform_grid(0.55, 0.95, 1601);
  const auto pa = linear_signal(s, population_state(s, "a"), fig1_pulse(), grid, eta1);
  auto peaks = testing::find_peaks(pa.total, 0.5);
  REQUIRE(peaks.size() >= 1);
  CHECK(std::abs(peaks[0].omega - 0.8) <= eta1);
  for (const auto& p : peaks) CHECK(std::abs(p.omega - 0.8) <= 2 * eta1);
  const auto pb = linear_signal(s, population_state(s, "b"), fig1_pulse(), grid, eta1);
  peaks = testing::find_peaks(pb.total, 0.5);
  REQUIRE(peaks.size() >= 1);
  for (const auto& p : peaks) CHECK(std::abs(p.omega - 0.7) <= 2 * eta1);

  // strong extrema of the coherent signal sit on w_ca or w_cb
  const auto coh = linear_signal(s, maximally_coherent_state(s, "a", "b"),
                                 fig1_pulse(150.0), grid, eta1);
  for (const auto* t : {&coh.pop, &coh.coh, &coh.total})
    for (const auto& p : testing::find_peaks(*t, 0.5))
      CHECK((std::abs(p.omega - 0.8) <= 2 * eta1 || std::abs(p.omega - 0.7) <= 2 * eta1));
}

TEST_CASE("three-level RWA form") {
  const auto s = fig1_system();
  const auto grid = uniform_grid(0.55, 0.95, 801);
  const auto pulse = fig1_pulse(60.0);
  const auto rho = maximally_coherent_state(s, "a", "b");
  const auto rwa = linear_signal_threelevel_rwa(s, rho, pulse, grid, eta1);
  CHECK(rwa.terms.size() == 4);
  CHECK(std::abs(testing::find_peaks(rwa.terms.at({0, 0}), 0.05)[0].omega - 0.8) <= eta1);
  CHECK(std::abs(testing::find_peaks(rwa.terms.at({1, 1}), 0.05)[0].omega - 0.7) <= eta1);

  // the full expansion differs only by counter-rotating terms
  const auto full = linear_signal(s, rho, pulse, grid, eta1);
  CHECK(testing::peak_normalized_diff(full.total.values, rwa.total.values) < 2e-2);
  std::vector<double> sum(grid.size(), 0.0);
  for (const auto& [k, t] : rwa.terms)
    for (std::size_t i = 0; i < grid.size(); ++i) sum[i] += t.values[i];
  CHECK(sum == rwa.total.values);

  CHECK_THROWS_AS(linear_signal_threelevel_rwa(two_level(1.0), population_state(two_level(1.0), "g"),
                                               pulse, grid, eta1),
                  ConfigurationError);
}

TEST_CASE("relabeling symmetry of the coherence signal") {
  // same physics with a and b stored in swapped order
  CMatrix mu = CMatrix::Zero(3, 3);
  mu(0, 2) = 1.0;
  mu(1, 2) = 1.0;
  const LevelSystem swapped({"b", "a", "c"}, {0.1, 0.0, 0.8}, mu);
  const auto s = fig1_system();
  const auto grid = uniform_grid(0.6, 0.9, 301);
  const auto x = linear_signal(s, maximally_coherent_state(s, "a", "b"), fig1_pulse(), grid, eta1);
  const auto y = linear_signal(swapped, maximally_coherent_state(swapped, "a", "b"), fig1_pulse(),
                               grid, eta1);
  CHECK(testing::peak_normalized_diff(x.coh.values, y.coh.values) < 1e-13);
  CHECK(testing::peak_normalized_diff(x.total.values, y.total.values) < 1e-13);
}

TEST_CASE("partition, linearity and scaling") {
  const auto s = complex_lambda();
  const auto grid = uniform_grid(0.6, 0.9, 201);
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 0.6;
  m(1, 1) = 0.4;
  m(0, 1) = cplx(0.2, 0.3);
  m(1, 0) = cplx(0.2, -0.3);
  const DensityMatrix rho(m);
  const auto pulse = fig1_pulse(40.0);
  const auto sig = linear_signal(s, rho, pulse, grid, eta1);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(sig.pop.values[i] + sig.coh.values[i] == sig.total.values[i]);

  const auto dia = linear_signal(s, rho.diagonal_part(), pulse, grid, eta1);
  const auto off = linear_signal(s, rho.coherence_part(), pulse, grid, eta1);
  CHECK(testing::peak_normalized_diff(dia.total.values, sig.pop.values) < 1e-14);
  CHECK(testing::peak_normalized_diff(off.total.values, sig.coh.values) < 1e-14);

  const auto big = linear_signal(s, rho, pulse.scaled(3.0), grid, eta1);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(big.total.values[i] == doctest::Approx(9.0 * sig.total.values[i]).epsilon(1e-12));

  const auto zero = linear_signal(s, rho, pulse.scaled(0.0), grid, eta1);
  CHECK(zero.total.max_abs() == 0.0);
}

TEST_CASE("stationary preparation") {
  const auto s = make_lambda_system(0.0, 0.1, 0.8, {}, 0.0259);
  const auto rho = thermal_state(s);
  const auto grid = uniform_grid(0.6, 0.9, 301);
  const auto ref = linear_signal(s, rho, fig1_pulse(), grid, eta1, Preparation::Stationary);
  for (double phi2 : {-300.0, 75.0, 500.0}) {
    const auto t = linear_signal(s, rho, fig1_pulse(phi2), grid, eta1, Preparation::Stationary);
    CHECK(testing::peak_normalized_diff(t.total.values, ref.total.values) < 1e-12);
  }
  CHECK_THROWS_AS(linear_signal(s, maximally_coherent_state(s, "a", "b"), fig1_pulse(), grid,
                                eta1, Preparation::Stationary),
                  ArgumentError);
}

TEST_CASE("argument errors") {
  const auto s = fig1_system();
  const auto rho = population_state(s, "a");
  CHECK_THROWS_AS(linear_signal(s, rho, fig1_pulse(), {}, eta1), ArgumentError);
  CHECK_THROWS_AS(linear_signal(s, rho, fig1_pulse(), {0.2, 0.1}, eta1), ArgumentError);
  CHECK_THROWS_AS(linear_signal(s, rho, fig1_pulse(), {0.2}, -1.0), ArgumentError);
  CHECK_THROWS_AS(linear_signal(s, population_state(two_level(1.0), "g"), fig1_pulse(), {0.2}, eta1),
                  ConfigurationError);
}

TEST_CASE("cw integrated signal") {
  const auto s = fig1_system();
  const auto rho = population_state(s, "a");
  const fields::CWField cw(cplx(0.3, 0.4), 0.77);
  const double expect =
      2.0 / eta1 * 0.25 * std::imag(matter_correlation_linear(s, rho, 0.77, eta1));
  CHECK(cw_integrated_signal(s, rho, cw, eta1) == doctest::Approx(expect).epsilon(1e-13));
  CHECK(cw_integrated_signal(s, rho, fields::CWField(0.0, 0.77), eta1) == 0.0);

  // coherent state: resonances only at w_ca and w_cb, none at w_ab
  const auto coh = maximally_coherent_state(s, "a", "b");
  const auto w1 = uniform_grid(0.05, 0.95, 1801);
  std::vector<double> vals;
  for (double w : w1) vals.push_back(cw_integrated_signal(s, coh, fields::CWField(1.0, w), eta1));
  const auto peaks = testing::find_peaks(w1, vals, 0.01);
  REQUIRE(peaks.size() == 2);
  for (const auto& p : peaks) CHECK((std::abs(p.omega - 0.7) < 1e-3 || std::abs(p.omega - 0.8) < 1e-3));
}

TEST_CASE("time-domain oracle") {
  const auto s = fig1_system();
  const auto grid = uniform_grid(0.6, 0.9, 31);
  const auto rho = maximally_coherent_state(s, "a", "b");
  const auto pulse = fig1_pulse(80.0);
  const auto fast = linear_signal(s, rho, pulse, grid, eta1);
  const auto slow = time_domain_oracle(s, rho, pulse, grid, eta1);
  CHECK(testing::peak_normalized_diff(slow.total.values, fast.total.values) < 1e-3);
  CHECK(testing::peak_normalized_diff(slow.pop.values, fast.pop.values) < 1e-3);
  CHECK(testing::peak_normalized_diff(slow.coh.values, fast.coh.values) < 1e-3);

  CMatrix zero = CMatrix::Zero(3, 3);
  const LevelSystem dark({"a", "b", "c"}, {0.0, 0.1, 0.8}, zero);
  CHECK(time_domain_oracle(dark, population_state(dark, "a"), pulse, grid, eta1).total.max_abs() == 0.0);

  const auto th = make_lambda_system(0.0, 0.1, 0.8, {}, 0.0259);
  OracleOptions opt;
  opt.prep = Preparation::Stationary;
  const auto g2 = uniform_grid(0.7, 0.85, 7);
  const auto e0 = time_domain_oracle(th, thermal_state(th), fig1_pulse(), g2, eta1, opt);
  const auto e1 = time_domain_oracle(th, thermal_state(th), fig1_pulse(120.0), g2, eta1, opt);
  CHECK(testing::peak_normalized_diff(e0.total.values, e1.total.values) < 1e-6);
}

}
