#pragma once

#include <stdexcept>
#include <string>

namespace mwsp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleColumnError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

struct MaxIterationsError : Error {
  using Error::Error;
};

struct UniverseMismatchError : Error {
  using Error::Error;
};

// Input-file errors carry the 1-based line number of the offending record.
struct ParseError : Error {
  ParseError(const std::string& message, long line)
      : Error(message + " (line " + std::to_string(line) + ")"), line(line) {}
  long line;
};

struct DuplicatePairError : ParseError {
  using ParseError::ParseError;
};

struct ProbabilityOutOfRangeError : ParseError {
  using ParseError::ParseError;
};

struct UnknownIdError : Error {
  using Error::Error;
};

}  // namespace mwsp
