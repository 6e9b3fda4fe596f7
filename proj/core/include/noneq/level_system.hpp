#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noneq/types.hpp"

namespace noneq {

// downward relaxation channel from -> to with rate in eV
struct DecayChannel {
  std::size_t from;
  std::size_t to;
  double rate;
};

// N-level system with energies in eV (hbar = 1). The dipole matrix holds
// only the lowering part: mu(i, c) != 0 requires energy(i) < energy(c).
class LevelSystem {
 public:
  LevelSystem(std::vector<std::string> labels, std::vector<double> energies,
              CMatrix dipole_lowering, std::vector<DecayChannel> decays = {},
              std::optional<double> temperature = std::nullopt);

  std::size_t size() const { return energies_.size(); }
  std::size_t index(std::string_view label) const;
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  double energy(std::size_t i) const { return energies_.at(i); }
  const std::vector<double>& energies() const { return energies_; }

  const CMatrix& dipole_lowering() const { return mu_; }
  // mu + mu^dagger
  const CMatrix& total_dipole() const { return v_; }

  const std::vector<DecayChannel>& decays() const { return decays_; }
  // listed downward rate from -> to, 0 when absent
  double decay_rate(std::size_t from, std::size_t to) const;

  const std::optional<double>& temperature() const { return kT_; }

  // copy with a new dipole matrix or temperature
  LevelSystem with_dipoles(CMatrix dipole_lowering) const;
  LevelSystem with_temperature(std::optional<double> kT) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> energies_;
  CMatrix mu_;
  CMatrix v_;
  std::vector<DecayChannel> decays_;
  std::optional<double> kT_;
};

// omega_i - omega_j
double bohr_frequency(const LevelSystem& s, std::size_t i, std::size_t j);
double bohr_frequency(const LevelSystem& s, std::string_view i,
                      std::string_view j);

// Three levels a < b < c with unit real dipoles a-c and b-c.
LevelSystem make_lambda_system(double wa, double wb, double wc,
                               std::vector<DecayChannel> decays = {},
                               std::optional<double> kT = std::nullopt);

}  // namespace noneq
