#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specturan {

/// Argument outside an operation's domain (vertex out of range, tol <= 0, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input; `offset` is the byte where decoding failed.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Family parameters outside their documented range.
class construction_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge rotation whose precondition is violated.
class rotation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A check was asked to run on input that does not meet its hypothesis.
class hypothesis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Work would exceed a configured cap (enumeration size, vertex count).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class empty_family_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specturan
