#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noneq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// unknown state label
struct LabelError : Error {
  using Error::Error;
};

// inconsistent or incomplete physical setup
struct ConfigurationError : Error {
  using Error::Error;
};

// bad call argument (eta <= 0, empty grid, i == j, ...)
struct ArgumentError : Error {
  using Error::Error;
};

// non-finite or out-of-range input to a special function
struct DomainError : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

struct DegeneracyError : NumericalError {
  DegeneracyError(const std::string& what, std::size_t kernel_dim)
      : NumericalError(what), kernel_dimension(kernel_dim) {}
  std::size_t kernel_dimension;
};

struct SingularityError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace noneq
