#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "noneq/density_matrix.hpp"
#include "noneq/level_system.hpp"
#include "noneq/pulse.hpp"
#include "noneq/response.hpp"
#include "noneq/signal.hpp"

namespace noneq::wavemixing {

using response::Preparation;

// Delta = w - w1 + w2 - w3
double detuning(double w, double w1, double w2, double w3);

// sum_cd rho_ab [...] for unit weight: <<I| V_L G(w) V_- G(w - w1') V_- |ab>>
cplx correlation_quadratic_pair(const LevelSystem& s, std::size_t a,
                                std::size_t b, double w, double w1p,
                                double eta);
cplx matter_correlation_quadratic(const LevelSystem& s,
                                  const DensityMatrix& rho, double w,
                                  double w1p, double eta);

// Keeps a chi3 term when every interaction moves the Liouville Bohr
// frequency in the direction of its field frequency and each propagator
// argument lies within `window` of its pole.
struct RwaFilter {
  std::array<double, 3> fields;  // chronological: w3', w2', w1'
  double window;
};

// One Liouville path |ab>> -> s1 -> s2 -> s3 of the third-order expansion.
// Bracket 1..4 follows the printed expansion: (ket, ket), (bra, ket),
// (ket, bra), (bra, bra) for the first two interactions.
struct Chi3Path {
  std::array<std::size_t, 2> s0, s1, s2, s3;
  cplx coefficient;  // dipole product with commutator signs
  int bracket;
};

class Chi3Expansion {
 public:
  explicit Chi3Expansion(const LevelSystem& s);

  const std::vector<Chi3Path>& paths(std::size_t a, std::size_t b) const;
  // <<I| V_L G(w) V_- G(w - w1') V_- G(w - w1' - w2') V_- |ab>> per unit
  // weight, optionally RWA filtered
  cplx evaluate(std::size_t a, std::size_t b, double w, double w1p, double w2p,
                double eta, const RwaFilter* filter = nullptr) const;
  const LevelSystem& system() const { return sys_; }

 private:
  LevelSystem sys_;
  std::vector<std::vector<Chi3Path>> paths_;
};

cplx chi3_generalized(const LevelSystem& s, const DensityMatrix& rho, double w,
                      double w1p, double w2p, double eta,
                      const RwaFilter* filter = nullptr);

// frequency w3' = w - w1' - w2' - w_ab at which the delta of pair (a,b) fires
double chi3_support(const LevelSystem& s, std::size_t a, std::size_t b,
                    double w, double w1p, double w2p);

struct FWMScenario {
  LevelSystem system;
  DensityMatrix rho;
  std::array<fields::CWField, 3> modes;  // pattern k1 - k2 + k3
  fields::GaussianProbe probe;
  double eta;
};

// One term of the resonant pathway list for the lambda system.
struct PathwayTerm {
  int family;     // 1..4
  bool exchange;  // w1 <-> w3
  std::size_t i, j, k;
  cplx weight;  // rho_ij
  cplx dipoles;
  cplx lead;                   // w - w1 + w2 - w3 - w_ij + i eta
  std::array<cplx, 3> denominators;
};

std::vector<PathwayTerm> pathway_terms(const FWMScenario& sc, double w);

struct PathwaySignal {
  std::array<SignalTrace, 4> family;  // a1..a4
  SignalTrace total;
};

PathwaySignal chi3_pathway_fwm(const FWMScenario& sc,
                               const std::vector<double>& grid,
                               Preparation prep = Preparation::Nonequilibrium);

// Same signal from the generalized chi3 with CW collapse over all mode
// orderings; filter_window <= 0 disables the RWA filter.
SignalTrace fwm_signal_from_chi3(const FWMScenario& sc,
                                 const std::vector<double>& grid,
                                 double filter_window);
double default_filter_window(const FWMScenario& sc);

SignalTrace twm_signal(const LevelSystem& s, const DensityMatrix& rho,
                       const std::array<fields::CWField, 2>& modes,
                       const fields::GaussianProbe& probe,
                       const std::vector<double>& grid, double eta);

}  // namespace noneq::wavemixing
