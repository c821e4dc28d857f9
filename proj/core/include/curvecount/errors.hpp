#pragma once

#include <stdexcept>
#include <string>

namespace curvecount {

/// Malformed input: bad surface, unknown letter, non-reduced word.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation was asked for a size beyond the desk limit.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The necklace is a proper power; the intersection formula does not apply.
class NonPrimitiveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace curvecount
