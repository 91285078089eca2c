#pragma once

#include <stdexcept>
#include <string>

namespace tradefreq {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters, infeasible levels, violated call contracts. CLI exit 3.
class DomainError : public Error {
  using Error::Error;
};

// Factorization, embedding or convergence failures. CLI exit 4.
class NumericalError : public Error {
  using Error::Error;
};

// Data that defeats estimation (degenerate series, fit out of range).
class EstimationError : public DomainError {
  using DomainError::DomainError;
};

// File access and parse failures. CLI exit 5.
class IoError : public Error {
  using Error::Error;
};

}  // namespace tradefreq
