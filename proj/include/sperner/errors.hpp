#pragma once

#include <stdexcept>
#include <string>

namespace sperner {

/// Malformed or out-of-range input (CLI exit code 2).
class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or time cap would be exceeded (CLI exit code 3).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well formed but a formula's hypothesis does not hold,
/// e.g. an unbounded poset passed to a bounded-poset formula (CLI exit code 4).
class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sperner
