#pragma once

#include <cstddef>
#include <string_view>

#include "noneq/level_system.hpp"
#include "noneq/types.hpp"

namespace noneq {

// Complex Hermitian N x N state. Construction validates Hermiticity and
// trace (1e-12 absolute) and non-negative diagonal.
class DensityMatrix {
 public:
  static constexpr double tolerance = 1e-12;

  explicit DensityMatrix(CMatrix m, double normalization = 1.0);

  const CMatrix& matrix() const { return m_; }
  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  double normalization() const { return norm_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  bool is_diagonal(double tol = 0.0) const;
  double purity() const;

  // populations only / coherences only (declared normalization 0)
  DensityMatrix diagonal_part() const;
  DensityMatrix coherence_part() const;

 private:
  CMatrix m_;
  double norm_;
};

DensityMatrix thermal_state(const LevelSystem& s);
DensityMatrix population_state(const LevelSystem& s, std::size_t i);
DensityMatrix population_state(const LevelSystem& s, std::string_view i);
DensityMatrix maximally_coherent_state(const LevelSystem& s, std::size_t i,
                                       std::size_t j);
DensityMatrix maximally_coherent_state(const LevelSystem& s,
                                       std::string_view i, std::string_view j);

// throws ConfigurationError when the state does not match the system
void check_compatible(const LevelSystem& s, const CMatrix& rho);

}  // namespace noneq
