#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alphasim {

/// Base class for all simulation-kernel errors.
class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A head attempted an action its access discipline forbids (e.g. a left
/// move on a forward-only head, or a write through a read head). These are
/// hard errors: the discipline is the model of time, so a silent no-op
/// would corrupt the semantics.
class DisciplineViolation : public SimError {
 public:
  using SimError::SimError;
};

/// A head was moved past a bounded tape end, or a bounded tape was
/// accessed on the missing side.
class BoundaryViolation : public SimError {
 public:
  using SimError::SimError;
};

/// A symbol outside the tape's alphabet was written or used in construction.
class AlphabetViolation : public SimError {
 public:
  using SimError::SimError;
};

/// Malformed bit stream while decoding tokens or records.
class CodecError : public SimError {
 public:
  CodecError(std::string msg, std::size_t offset)
      : SimError(msg + " (bit offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A spec file (machine, network, events, scheme) failed to parse.
class SpecParseError : public SimError {
 public:
  SpecParseError(std::string file, int line, int col, std::string msg)
      : SimError(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                 ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// A message names a destination the network does not know.
class RoutingError : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace alphasim
