#pragma once

#include "noneq/types.hpp"

namespace noneq::specfun {

// w(z) = exp(-z^2) erfc(-i z). Relative error <= 1e-10 on |z| <= 10
// (tested); requires |z| < 1e8. Taylor series for |z| < 0.5, Weideman's
// rational approximation (N = 40) up to |z| = 10, Laplace continued fraction
// beyond; the lower half plane uses w(z) = 2 exp(-z^2) - w(-z).
cplx faddeeva(cplx z);

// Erfi(z) = -i erf(i z)
cplx erfi(cplx z);

}  // namespace noneq::specfun
