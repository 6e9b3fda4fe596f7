#include "noneq/liouville.hpp"

#include "noneq/errors.hpp"

namespace noneq {

LiouvilleIndex::LiouvilleIndex(std::size_t n) : n_(n), flat_(n * n) {
  if (n == 0) throw ArgumentError("Liouville index needs n > 0");
  for (std::size_t i = 0; i < n; ++i) pairs_.emplace_back(i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs_.emplace_back(i, j);
      pairs_.emplace_back(j, i);
    }
  for (std::size_t f = 0; f < pairs_.size(); ++f)
    flat_[pairs_[f].first * n + pairs_[f].second] = f;
}

std::size_t LiouvilleIndex::flat(std::size_t k, std::size_t l) const {
  if (k >= n_ || l >= n_) throw ArgumentError("Liouville pair out of range");
  return flat_[k * n_ + l];
}

std::pair<std::size_t, std::size_t> LiouvilleIndex::pair(std::size_t f) const {
  if (f >= pairs_.size()) throw ArgumentError("Liouville index out of range");
  return pairs_[f];
}

CVector LiouvilleIndex::vectorize(const CMatrix& rho) const {
  CVector v(static_cast<Eigen::Index>(size()));
  for (std::size_t f = 0; f < size(); ++f)
    v(f) = rho(pairs_[f].first, pairs_[f].second);
  return v;
}

CMatrix LiouvilleIndex::unvectorize(const CVector& v) const {
  CMatrix m(n_, n_);
  for (std::size_t f = 0; f < size(); ++f)
    m(pairs_[f].first, pairs_[f].second) = v(f);
  return m;
}

namespace liouville {

CMatrix left(const LiouvilleIndex& idx, const CMatrix& a) {
  const std::size_t n = idx.levels();
  CMatrix s = CMatrix::Zero(idx.size(), idx.size());
  // (A X)_kl = sum_m A_km X_ml
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m)
        s(idx.flat(k, l), idx.flat(m, l)) += a(k, m);
  return s;
}

CMatrix right(const LiouvilleIndex& idx, const CMatrix& a) {
  const std::size_t n = idx.levels();
  CMatrix s = CMatrix::Zero(idx.size(), idx.size());
  // (X A)_kl = sum_m X_km A_ml
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m)
        s(idx.flat(k, l), idx.flat(k, m)) += a(m, l);
  return s;
}

CMatrix commutator(const LiouvilleIndex& idx, const CMatrix& a) {
  return left(idx, a) - right(idx, a);
}

Eigen::RowVectorXcd trace_bra(const LiouvilleIndex& idx) {
  Eigen::RowVectorXcd r = Eigen::RowVectorXcd::Zero(idx.size());
  for (std::size_t i = 0; i < idx.levels(); ++i) r(idx.flat(i, i)) = 1.0;
  return r;
}

CMatrix free_propagator(const LiouvilleIndex& idx, const LevelSystem& s,
                        cplx nu, double eta, bool advanced) {
  CMatrix g = CMatrix::Zero(idx.size(), idx.size());
  const double sign = advanced ? -1.0 : 1.0;
  for (std::size_t f = 0; f < idx.size(); ++f) {
    const auto [k, l] = idx.pair(f);
    g(f, f) = 1.0 / (nu - bohr_frequency(s, k, l) + I * (sign * eta));
  }
  return g;
}

}  // namespace liouville

}  // namespace noneq
