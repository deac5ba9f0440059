#pragma once

#include <stdexcept>
#include <string>

namespace oscilspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed potential or problem description.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Working precision or truncation order hit its ceiling before the series
/// stabilised.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Root refinement was handed an interval without a sign change.
class NoSignChange : public Error {
 public:
  using Error::Error;
};

/// A sign change of the wavefunction could not be separated from rounding noise.
class AmbiguousNode : public Error {
 public:
  using Error::Error;
};

/// Node counts revealed a level missing from the assembled spectrum.
class MissedLevel : public Error {
 public:
  using Error::Error;
};

}  // namespace oscilspec
