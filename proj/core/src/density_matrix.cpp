#include "noneq/density_matrix.hpp"

#include <cmath>
#include <string>

#include "noneq/errors.hpp"

namespace noneq {

DensityMatrix::DensityMatrix(CMatrix m, double normalization)
    : m_(std::move(m)), norm_(normalization) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw ArgumentError("density matrix must be square and non-empty");
  if (!m_.allFinite()) throw ArgumentError("density matrix is not finite");
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance)
    throw ArgumentError("density matrix is not Hermitian (deviation " +
                        std::to_string(herm) + ")");
  const cplx tr = m_.trace();
  if (std::abs(tr - cplx{norm_, 0.0}) > tolerance)
    throw ArgumentError("density matrix trace " + std::to_string(tr.real()) +
                        " differs from " + std::to_string(norm_));
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    if (std::abs(m_(i, i).imag()) > tolerance || m_(i, i).real() < -tolerance)
      throw ArgumentError("density matrix diagonal must be real and >= 0");
  }
}

bool DensityMatrix::is_diagonal(double tol) const {
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      if (i != j && std::abs(m_(i, j)) > tol) return false;
  return true;
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix DensityMatrix::diagonal_part() const {
  CMatrix d = m_.diagonal().asDiagonal();
  return DensityMatrix(d, norm_);
}

DensityMatrix DensityMatrix::coherence_part() const {
  CMatrix c = m_;
  c.diagonal().setZero();
  return DensityMatrix(c, 0.0);
}

DensityMatrix thermal_state(const LevelSystem& s) {
  if (!s.temperature())
    throw ConfigurationError("thermal state requires a temperature");
  const double kT = *s.temperature();
  const std::size_t n = s.size();
  double emin = s.energy(0);
  for (double e : s.energies()) emin = std::min(emin, e);
  Eigen::VectorXd w(n);
  for (std::size_t i = 0; i < n; ++i)
    w(static_cast<Eigen::Index>(i)) = std::exp(-(s.energy(i) - emin) / kT);
  w /= w.sum();
  CMatrix m = w.cast<cplx>().asDiagonal();
  return DensityMatrix(m);
}

DensityMatrix population_state(const LevelSystem& s, std::size_t i) {
  if (i >= s.size()) throw LabelError("state index out of range");
  CMatrix m = CMatrix::Zero(s.size(), s.size());
  m(i, i) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix population_state(const LevelSystem& s, std::string_view i) {
  return population_state(s, s.index(i));
}

DensityMatrix maximally_coherent_state(const LevelSystem& s, std::size_t i,
                                       std::size_t j) {
  if (i >= s.size() || j >= s.size())
    throw LabelError("state index out of range");
  if (i == j)
    throw ArgumentError("maximally coherent state needs two distinct states");
  CMatrix m = CMatrix::Zero(s.size(), s.size());
  m(i, i) = m(j, j) = m(i, j) = m(j, i) = 0.5;
  return DensityMatrix(m);
}

DensityMatrix maximally_coherent_state(const LevelSystem& s,
                                       std::string_view i, std::string_view j) {
  return maximally_coherent_state(s, s.index(i), s.index(j));
}

void check_compatible(const LevelSystem& s, const CMatrix& rho) {
  if (rho.rows() != static_cast<Eigen::Index>(s.size()) ||
      rho.cols() != static_cast<Eigen::Index>(s.size()))
    throw ConfigurationError("density matrix size does not match system");
}

}  // namespace noneq
