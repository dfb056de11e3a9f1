#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockdet {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A matrix that had to be inverted (or solved against) failed the pivot
/// tolerance.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the block recursion when the pivot block at `level` (the block
/// alpha^(level)_{index,index}, 1-based) cannot be inverted.
class SingularPivotBlock : public SingularMatrix {
 public:
  SingularPivotBlock(std::size_t level, std::size_t index)
      : SingularMatrix("singular pivot block alpha^(" + std::to_string(level) + ")_{" +
                       std::to_string(index) + "," + std::to_string(index) + "}"),
        level_(level),
        index_(index) {}

  std::size_t level() const noexcept { return level_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t level_;
  std::size_t index_;
};

class CommutatorViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blockdet
