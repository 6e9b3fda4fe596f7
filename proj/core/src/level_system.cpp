#include "noneq/level_system.hpp"

#include <cmath>
#include <unordered_set>

#include "noneq/errors.hpp"

namespace noneq {

LevelSystem::LevelSystem(std::vector<std::string> labels,
                         std::vector<double> energies, CMatrix dipole_lowering,
                         std::vector<DecayChannel> decays,
                         std::optional<double> temperature)
    : labels_(std::move(labels)),
      energies_(std::move(energies)),
      mu_(std::move(dipole_lowering)),
      decays_(std::move(decays)),
      kT_(temperature) {
  const std::size_t n = energies_.size();
  if (n < 2) throw ConfigurationError("level system needs at least 2 levels");
  if (labels_.size() != n)
    throw ConfigurationError("label count does not match energy count");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ConfigurationError("empty state label");
    if (!seen.insert(l).second)
      throw ConfigurationError("duplicate state label '" + l + "'");
  }
  for (double e : energies_)
    if (!std::isfinite(e)) throw ConfigurationError("non-finite energy");
  if (mu_.rows() != static_cast<Eigen::Index>(n) ||
      mu_.cols() != static_cast<Eigen::Index>(n))
    throw ConfigurationError("dipole matrix must be N x N");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      const cplx m = mu_(i, c);
      if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
        throw ConfigurationError("non-finite dipole entry");
      if (m != cplx{} && !(energies_[i] < energies_[c]))
        throw ConfigurationError("dipole entry " + labels_[i] + "," +
                                 labels_[c] +
                                 " is not a lowering (upper -> lower) element");
    }
  v_ = mu_ + mu_.adjoint();
  for (const auto& d : decays_) {
    if (d.from >= n || d.to >= n || d.from == d.to)
      throw ConfigurationError("invalid decay channel");
    if (!(d.rate >= 0.0) || !std::isfinite(d.rate))
      throw ConfigurationError("decay rates must be finite and >= 0");
  }
  if (kT_ && !(*kT_ > 0.0 && std::isfinite(*kT_)))
    throw ConfigurationError("temperature must be > 0");
}

std::size_t LevelSystem::index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw LabelError("unknown state label '" + std::string(label) + "'");
}

double LevelSystem::decay_rate(std::size_t from, std::size_t to) const {
  double r = 0.0;
  for (const auto& d : decays_)
    if (d.from == from && d.to == to) r += d.rate;
  return r;
}

LevelSystem LevelSystem::with_dipoles(CMatrix dipole_lowering) const {
  return LevelSystem(labels_, energies_, std::move(dipole_lowering), decays_,
                     kT_);
}

LevelSystem LevelSystem::with_temperature(std::optional<double> kT) const {
  return LevelSystem(labels_, energies_, mu_, decays_, kT);
}

double bohr_frequency(const LevelSystem& s, std::size_t i, std::size_t j) {
  if (i >= s.size() || j >= s.size())
    throw LabelError("state index out of range");
  return s.energy(i) - s.energy(j);
}

double bohr_frequency(const LevelSystem& s, std::string_view i,
                      std::string_view j) {
  return bohr_frequency(s, s.index(i), s.index(j));
}

LevelSystem make_lambda_system(double wa, double wb, double wc,
                               std::vector<DecayChannel> decays,
                               std::optional<double> kT) {
  CMatrix mu = CMatrix::Zero(3, 3);
  mu(0, 2) = 1.0;
  mu(1, 2) = 1.0;
  return LevelSystem({"a", "b", "c"}, {wa, wb, wc}, mu, std::move(decays), kT);
}

}  // namespace noneq
