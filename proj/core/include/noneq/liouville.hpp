#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "noneq/level_system.hpp"
#include "noneq/types.hpp"

namespace noneq {

// Flat Liouville ordering: populations first, then for i < j the pairs
// (i,j), (j,i). For three levels this is aa, bb, cc, ab, ba, ac, ca, bc, cb.
class LiouvilleIndex {
 public:
  explicit LiouvilleIndex(std::size_t n);

  std::size_t levels() const { return n_; }
  std::size_t size() const { return n_ * n_; }
  std::size_t flat(std::size_t k, std::size_t l) const;
  std::pair<std::size_t, std::size_t> pair(std::size_t f) const;

  CVector vectorize(const CMatrix& rho) const;
  CMatrix unvectorize(const CVector& v) const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> flat_;
};

namespace liouville {

// superoperators acting on vectorized density matrices
CMatrix left(const LiouvilleIndex& idx, const CMatrix& a);   // A X
CMatrix right(const LiouvilleIndex& idx, const CMatrix& a);  // X A
CMatrix commutator(const LiouvilleIndex& idx, const CMatrix& a);

// <<I| as a row: picks out the trace
Eigen::RowVectorXcd trace_bra(const LiouvilleIndex& idx);

// diagonal free propagator G_kl(nu) = 1/(nu - omega_kl + i eta); with
// advanced = true the backward propagator 1/(nu - omega_kl - i eta)
CMatrix free_propagator(const LiouvilleIndex& idx, const LevelSystem& s,
                        cplx nu, double eta, bool advanced = false);

}  // namespace liouville

}  // namespace noneq
