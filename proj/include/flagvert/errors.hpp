#pragma once

#include <stdexcept>
#include <string>

namespace fv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};
struct NonGenericParameters : Error {
  using Error::Error;
};
struct DegenerateModulus : Error {
  using Error::Error;
};
struct GenericityExhausted : Error {
  using Error::Error;
};
struct PochhammerPole : Error {
  using Error::Error;
};
struct ZeroArgument : Error {
  using Error::Error;
};
struct DivisionByZeroTheta : Error {
  using Error::Error;
};
struct SymmetrizationPole : Error {
  using Error::Error;
};
struct ZeroDiagonal : Error {
  using Error::Error;
};
struct CoincidentCoordinates : Error {
  using Error::Error;
};
struct TailTooLarge : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace fv
