#pragma once

#include <stdexcept>
#include <string>

namespace selfrwa {

/// Bad input to a public operation (negative dimension, non-positive frequency, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An infinite series did not meet its tail criterion within the term cap.
class TruncationFailure : public std::runtime_error {
 public:
  TruncationFailure(const std::string& what, double partial, double last_term)
      : std::runtime_error(what), partial_value(partial), last_term_size(last_term) {}
  double partial_value;
  double last_term_size;
};

/// Iterative eigensolver ran out of sweeps.
class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// V''(0) <= 0: there is no harmonic reference oscillator to expand around.
class NoSelfOscillator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested Morse level lies above the dissociation limit.
class UnboundLevel : public std::domain_error {
 public:
  UnboundLevel(const std::string& what, int level, int max_bound)
      : std::domain_error(what), level(level), max_bound(max_bound) {}
  int level;
  int max_bound;
};

/// A Pochhammer factor of the lower parameter vanished before the series terminated.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateNormalization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace selfrwa
