#pragma once

#include <stdexcept>
#include <string>

namespace hhext {

/// Precondition violation on a public operation (bad n, mismatched fields, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was refused because its matrices would exceed a size cap.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::size_t dimension)
      : std::runtime_error(what), dimension_(dimension) {}
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

/// An internal cross-check failed; the computed objects contradict a
/// structural fact that the engine relies on.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hhext
