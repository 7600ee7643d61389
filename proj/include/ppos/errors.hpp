#pragma once

#include <stdexcept>
#include <string>

namespace ppos {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact arithmetic
struct NotDivisible : Error { using Error::Error; };
struct NonzeroConstantTerm : Error { using Error::Error; };
struct NotReversible : Error { using Error::Error; };

// partitions
struct LimitExceeded : Error { using Error::Error; };
struct GroundMismatch : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : Error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

// posets
struct NotPure : Error { using Error::Error; };
struct NoMinimum : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct UnequalMaxRanks : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };

// homology
struct NotBounded : Error { using Error::Error; };

// hopf
struct NonIntegerCoefficient : Error { using Error::Error; };

}  // namespace ppos
