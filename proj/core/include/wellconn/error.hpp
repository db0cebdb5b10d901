#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wellconn {

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition of a library call was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two inputs that must describe the same thing do not (node universes,
/// graph fingerprints, description-length units).
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A re-clustering step failed: the external tool exited non-zero, wrote
/// unreadable output, or the clusterer returned something that is not a
/// partition of the part it was given.
class ClustererError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wellconn
