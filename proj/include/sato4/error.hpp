#pragma once

#include <stdexcept>
#include <string>

namespace sato4 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed PD text or script JSON.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally invalid diagram (arc multiplicity, orientation, unknown ids).
struct DiagramError : Error {
  using Error::Error;
};

/// A Reidemeister move or crossing change whose local pattern does not match.
struct MoveError : Error {
  using Error::Error;
};

/// Script-level failure; carries the index of the failing move (-1 if none).
struct ScriptError : Error {
  ScriptError(const std::string& what, int move_index)
      : Error(what), move_index(move_index) {}
  int move_index;
};

struct CalibrationError : Error {
  using Error::Error;
};

}  // namespace sato4
