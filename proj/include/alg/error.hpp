#pragma once

#include <stdexcept>
#include <string>

namespace alg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction input (bad modulus, non-ideal, axiom failure, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration was requested above the configured cardinality cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": cardinality " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)) {}
};

}  // namespace alg
