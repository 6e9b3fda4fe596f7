#pragma once

#include <complex>

#include <Eigen/Dense>

namespace noneq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr cplx I{0.0, 1.0};

}  // namespace noneq
