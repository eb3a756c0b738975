#pragma once

#include <stdexcept>
#include <string>

namespace filiform {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input data (rational strings, law files, family requests).
class ParseError : public Error {
public:
  using Error::Error;
};

// Operand dimensions do not match.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// Invariants z1/z2 requested for the model filiform algebra, where they
// are undefined.
class ModelAlgebraError : public Error {
public:
  using Error::Error;
};

} // namespace filiform
