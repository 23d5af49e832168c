#pragma once

#include <stdexcept>
#include <string>

namespace bta {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidShape : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

struct NotInSchurAlgebra : Error {
  using Error::Error;
};

struct NotBlockToeplitz : Error {
  using Error::Error;
};

struct ConditionViolated : Error {
  using Error::Error;
};

struct NotCommutative : Error {
  using Error::Error;
};

struct NotToeplitzClosed : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

struct DegeneratePair : Error {
  using Error::Error;
};

struct NoInvertibleOffDiagonal : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace bta
