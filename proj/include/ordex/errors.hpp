// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ordex {

// Base class for all library errors. Subclasses mirror the error names of
// the operation contracts so callers can catch precisely.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration guard: C(N,n) exceeds the enumeration budget.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// Monotonicity ratio P(n)/P(n+1) with a zero denominator (n >= M).
class UndefinedRatio : public Error {
 public:
  using Error::Error;
};

// Scheduling an event before the current simulated time.
class TimeTravel : public Error {
 public:
  using Error::Error;
};

// Event queue drained while the stop predicate is still false.
class Deadlock : public Error {
 public:
  using Error::Error;
};

class DuplicateVote : public Error {
 public:
  using Error::Error;
};

class EmptyCommittee : public Error {
 public:
  using Error::Error;
};

class WrongProposer : public Error {
 public:
  using Error::Error;
};

// Combined-mode re-execution disagrees with the proposed state commitment.
class CommitmentMismatch : public Error {
 public:
  using Error::Error;
};

// Block applied against a state whose height does not precede it.
class HeightGap : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidOverride : public Error {
 public:
  using Error::Error;
};

}  // namespace ordex
