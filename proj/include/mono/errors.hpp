#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mono {

/// Argument outside an operation's domain (e.g. enumeration index < 1).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element or norm spec does not conform to the group descriptor.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The anchor table is too shallow to certify a result.
class ExtendTableError : public std::runtime_error {
 public:
  ExtendTableError(std::size_t required_depth, std::size_t actual_depth)
      : std::runtime_error("extend table: required depth " + std::to_string(required_depth) +
                           ", table has depth " + std::to_string(actual_depth)),
        required_depth_(required_depth) {}

  std::size_t required_depth() const noexcept { return required_depth_; }

 private:
  std::size_t required_depth_;
};

/// A loaded table disagrees with the deterministic construction.
class CorruptedTableError : public std::runtime_error {
 public:
  explicit CorruptedTableError(const std::string& what)
      : std::runtime_error("corrupted table: " + what) {}
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counterexample hypotheses v1, v2 < 1/2 were not met; no contradiction is claimed.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mono
