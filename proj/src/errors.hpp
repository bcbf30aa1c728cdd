#pragma once

#include <stdexcept>
#include <string>

namespace weightcalc {

// Error taxonomy mirrored one-to-one by the C API status codes.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameter value (family parameter out of range, non-positive power, ...).
class ParamError : public Error {
public:
  using Error::Error;
};

// Structurally incompatible operands (mismatched truncations, empty input, ...).
class ShapeError : public Error {
public:
  using Error::Error;
};

// Evaluation outside the validity region of a truncated object.
class DomainError : public Error {
public:
  using Error::Error;
};

// Requested operation needs more truncation than the operand carries.
class TruncationError : public Error {
public:
  using Error::Error;
};

// Malformed textual input (JSON spec, inline spec).
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace weightcalc
