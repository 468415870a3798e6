#pragma once

#include <stdexcept>
#include <string>

namespace kht {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed tangle notation; carries the offending source position.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int column_)
      : Error("line " + std::to_string(line_) + ", col " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

/// A diagram violating a structural invariant (port degrees, orientation
/// consistency, boundary labels, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Port data that admits no planar interpretation. Detected lazily, when a
/// saddle changes component counts in a way no planar cobordism can.
struct GeometryError : Error {
  using Error::Error;
};

/// Resource limit exceeded (crossing cap).
struct CapError : Error {
  using Error::Error;
};

}  // namespace kht
