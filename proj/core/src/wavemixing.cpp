#include "noneq/wavemixing.hpp"

#include <algorithm>
#include <cmath>

#include "noneq/errors.hpp"

namespace noneq::wavemixing {

using response::check_eta;

double detuning(double w, double w1, double w2, double w3) {
  return w - w1 + w2 - w3;
}

namespace {

cplx G(const LevelSystem& s, std::size_t k, std::size_t l, double nu,
       double eta) {
  return 1.0 / (nu - bohr_frequency(s, k, l) + I * eta);
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

cplx correlation_quadratic_pair(const LevelSystem& s, std::size_t a,
                                std::size_t b, double w, double w1p,
                                double eta) {
  const CMatrix& v = s.total_dipole();
  const double nu = w - w1p;
  cplx sum = 0.0;
  for (std::size_t c = 0; c < s.size(); ++c)
    for (std::size_t d = 0; d < s.size(); ++d) {
      const cplx t1 = v(d, c) * v(c, a);
      if (t1 != cplx{})
        sum += t1 * G(s, c, b, nu, eta) *
               v(b, d) * (G(s, d, b, w, eta) - G(s, c, d, w, eta));
      const cplx t2 = v(d, a) * v(b, c);
      if (t2 != cplx{})
        sum += t2 * G(s, a, c, nu, eta) *
               v(c, d) * (G(s, a, d, w, eta) - G(s, d, c, w, eta));
    }
  return sum;
}

cplx matter_correlation_quadratic(const LevelSystem& s,
                                  const DensityMatrix& rho, double w,
                                  double w1p, double eta) {
  check_eta(eta);
  check_compatible(s, rho.matrix());
  cplx sum = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (rho(a, b) != cplx{})
        sum += rho(a, b) * correlation_quadratic_pair(s, a, b, w, w1p, eta);
  return sum;
}

Chi3Expansion::Chi3Expansion(const LevelSystem& s)
    : sys_(s), paths_(s.size() * s.size()) {
  const std::size_t n = s.size();
  const CMatrix& v = s.total_dipole();
  using State = std::array<std::size_t, 2>;
  struct Step {
    State to;
    cplx coef;
    bool ket;
  };
  // [V, |k><l|] = sum_m V_mk |m><l| - sum_m V_lm |k><m|
  auto steps = [&](State st) {
    std::vector<Step> out;
    for (std::size_t m = 0; m < n; ++m) {
      if (v(m, st[0]) != cplx{}) out.push_back({{m, st[1]}, v(m, st[0]), true});
      if (v(st[1], m) != cplx{})
        out.push_back({{st[0], m}, -v(st[1], m), false});
    }
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto& list = paths_[a * n + b];
      const State s0{a, b};
      for (const auto& x1 : steps(s0))
        for (const auto& x2 : steps(x1.to))
          for (const auto& x3 : steps(x2.to)) {
            // closing <<I| V_L: Tr(V |k><l|) = V_lk
            const cplx close = v(x3.to[1], x3.to[0]);
            if (close == cplx{}) continue;
            const int bracket = x1.ket ? (x2.ket ? 1 : 3) : (x2.ket ? 2 : 4);
            list.push_back({s0, x1.to, x2.to, x3.to,
                            x1.coef * x2.coef * x3.coef * close, bracket});
          }
    }
}

const std::vector<Chi3Path>& Chi3Expansion::paths(std::size_t a,
                                                  std::size_t b) const {
  if (a >= sys_.size() || b >= sys_.size())
    throw LabelError("state index out of range");
  return paths_[a * sys_.size() + b];
}

cplx Chi3Expansion::evaluate(std::size_t a, std::size_t b, double w,
                             double w1p, double w2p, double eta,
                             const RwaFilter* filter) const {
  const double nu1 = w - w1p;
  const double nu2 = w - w1p - w2p;
  auto bohr = [&](const std::array<std::size_t, 2>& st) {
    return bohr_frequency(sys_, st[0], st[1]);
  };
  cplx sum = 0.0;
  for (const auto& p : paths(a, b)) {
    if (filter) {
      const std::array<double, 4> wb{bohr(p.s0), bohr(p.s1), bohr(p.s2),
                                     bohr(p.s3)};
      bool keep = true;
      for (int q = 0; q < 3 && keep; ++q) {
        const double jump = wb[q + 1] - wb[q];
        keep = sign_of(jump) != 0 && sign_of(jump) == sign_of(filter->fields[q]);
      }
      keep = keep && std::abs(nu2 - wb[1]) <= filter->window &&
             std::abs(nu1 - wb[2]) <= filter->window &&
             std::abs(w - wb[3]) <= filter->window;
      if (!keep) continue;
    }
    sum += p.coefficient / ((nu2 - bohr(p.s1) + I * eta) *
                            (nu1 - bohr(p.s2) + I * eta) *
                            (w - bohr(p.s3) + I * eta));
  }
  return sum;
}

cplx chi3_generalized(const LevelSystem& s, const DensityMatrix& rho, double w,
                      double w1p, double w2p, double eta,
                      const RwaFilter* filter) {
  check_eta(eta);
  check_compatible(s, rho.matrix());
  const Chi3Expansion ex(s);
  cplx sum = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (rho(a, b) != cplx{})
        sum += rho(a, b) * ex.evaluate(a, b, w, w1p, w2p, eta, filter);
  return sum;
}

double chi3_support(const LevelSystem& s, std::size_t a, std::size_t b,
                    double w, double w1p, double w2p) {
  return w - w1p - w2p - bohr_frequency(s, a, b);
}

namespace {

void check_fwm(const FWMScenario& sc) {
  check_eta(sc.eta);
  check_compatible(sc.system, sc.rho.matrix());
  if (sc.modes[0].sign != 1 || sc.modes[1].sign != -1 || sc.modes[2].sign != 1)
    throw ConfigurationError("FWM modes must follow the (+, -, +) pattern");
}

}  // namespace

std::vector<PathwayTerm> pathway_terms(const FWMScenario& sc, double w) {
  check_fwm(sc);
  const LevelSystem& s = sc.system;
  const std::size_t c = response::check_lambda_topology(s);
  std::vector<std::size_t> lower;
  for (std::size_t q = 0; q < 3; ++q)
    if (q != c) lower.push_back(q);
  const CMatrix& mu = s.dipole_lowering();
  const double eta = sc.eta;
  const double w2 = sc.modes[1].frequency;
  auto wd = [&](std::size_t p, std::size_t q) {
    return bohr_frequency(s, p, q);
  };
  auto den = [&](double x) { return cplx{x, eta}; };

  std::vector<PathwayTerm> out;
  for (bool exch : {false, true}) {
    const double x = exch ? sc.modes[2].frequency : sc.modes[0].frequency;
    const double y = exch ? sc.modes[0].frequency : sc.modes[2].frequency;
    for (std::size_t i : lower)
      for (std::size_t j : lower) {
        const cplx r = sc.rho(i, j);
        if (r == cplx{}) continue;
        const cplx lead = den(w - x + w2 - y - wd(i, j));
        for (std::size_t k : lower) {
          // mu_jc mu_kc^* mu_kc mu_ic^*; the printed mu_cj of a2-a4 is the
          // same lowering element mu_jc
          const cplx dip = mu(j, c) * std::conj(mu(k, c)) * mu(k, c) *
                           std::conj(mu(i, c));
          out.push_back({1, exch, i, j, k, r, dip, lead,
                         {den(w - wd(c, j)), den(w - y - wd(k, j)),
                          den(w + w2 - y - wd(c, j))}});
          out.push_back({2, exch, i, j, k, r, dip, lead,
                         {den(w - wd(c, k)), den(w - y),
                          den(w + w2 - y - wd(c, j))}});
          out.push_back({3, exch, i, j, k, r, dip, lead,
                         {den(w - wd(c, k)), den(w - x - wd(i, k)),
                          den(w - x - y - wd(i, c))}});
          // the printed first denominator reads (w - w_cj); the pathway ends
          // in the |c><k| coherence, so the pole is w_ck
          out.push_back({4, exch, i, j, k, r, dip, lead,
                         {den(w - wd(c, k)), den(w - y),
                          den(w - x - y - wd(i, c))}});
        }
      }
  }
  return out;
}

PathwaySignal chi3_pathway_fwm(const FWMScenario& sc,
                               const std::vector<double>& grid,
                               Preparation prep) {
  check_fwm(sc);
  check_grid(grid);
  PathwaySignal out;
  for (int f = 0; f < 4; ++f)
    out.family[f] = SignalTrace(grid, "a" + std::to_string(f + 1), sc.eta);
  out.total = SignalTrace(grid, "total", sc.eta);
  const cplx amps = sc.modes[2].amplitude * std::conj(sc.modes[1].amplitude) *
                    sc.modes[0].amplitude;
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double w = grid[q];
    const cplx fields = sc.probe(w) * amps;
    std::array<double, 4> acc{};
    for (const auto& t : pathway_terms(sc, w)) {
      // one-sided CW factor i / lead, or its full-transform nascent delta
      const cplx f = prep == Preparation::Stationary
                         ? cplx{2.0 * sc.eta / std::norm(t.lead), 0.0}
                         : I / t.lead;
      const cplx val = fields * t.weight * t.dipoles * f /
                       (t.denominators[0] * t.denominators[1] *
                        t.denominators[2]);
      acc[t.family - 1] += 2.0 * val.imag();
    }
    for (int f = 0; f < 4; ++f) {
      out.family[f].values[q] = acc[f];
      out.total.values[q] += acc[f];
    }
  }
  return out;
}

double default_filter_window(const FWMScenario& sc) {
  double m = 0.0;
  for (const auto& mode : sc.modes) m = std::max(m, mode.frequency);
  return 10.0 * m;
}

SignalTrace fwm_signal_from_chi3(const FWMScenario& sc,
                                 const std::vector<double>& grid,
                                 double filter_window) {
  check_fwm(sc);
  check_grid(grid);
  const LevelSystem& s = sc.system;
  const Chi3Expansion ex(s);
  std::array<fields::CWComponent, 3> m;
  for (int q = 0; q < 3; ++q) m[q] = fields::cw_spectrum(sc.modes[q]);
  std::array<int, 3> order{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do perms.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));

  SignalTrace out(grid, "total", sc.eta);
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double w = grid[q];
    cplx acc = 0.0;
    for (const auto& p : perms) {
      // p[0] is the last interaction (w1'), p[2] the first (one-sided)
      const auto& last = m[p[0]];
      const auto& mid = m[p[1]];
      const auto& first = m[p[2]];
      const RwaFilter filt{{first.frequency, mid.frequency, last.frequency},
                           filter_window};
      const cplx amp = last.amplitude * mid.amplitude * first.amplitude;
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
          const cplx r = sc.rho(a, b);
          if (r == cplx{}) continue;
          const cplx lead = cplx{w - last.frequency - mid.frequency -
                                     first.frequency - bohr_frequency(s, a, b),
                                 sc.eta};
          acc += amp * r * I / lead *
                 ex.evaluate(a, b, w, last.frequency, mid.frequency, sc.eta,
                             filter_window > 0.0 ? &filt : nullptr);
        }
    }
    out.values[q] = 2.0 * std::imag(sc.probe(w) * acc);
  }
  return out;
}

SignalTrace twm_signal(const LevelSystem& s, const DensityMatrix& rho,
                       const std::array<fields::CWField, 2>& modes,
                       const fields::GaussianProbe& probe,
                       const std::vector<double>& grid, double eta) {
  check_eta(eta);
  check_grid(grid);
  check_compatible(s, rho.matrix());
  const std::array<fields::CWComponent, 2> m{fields::cw_spectrum(modes[0]),
                                             fields::cw_spectrum(modes[1])};
  SignalTrace out(grid, "total", eta);
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double w = grid[q];
    cplx acc = 0.0;
    for (int last = 0; last < 2; ++last) {
      const auto& l = m[last];
      const auto& f = m[1 - last];
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
          const cplx r = rho(a, b);
          if (r == cplx{}) continue;
          const cplx lead = cplx{
              w - l.frequency - f.frequency - bohr_frequency(s, a, b), eta};
          acc += l.amplitude * f.amplitude * r * I / lead *
                 correlation_quadratic_pair(s, a, b, w, l.frequency, eta);
        }
    }
    out.values[q] = 2.0 * std::imag(probe(w) * acc);
  }
  return out;
}

}  // namespace noneq::wavemixing
