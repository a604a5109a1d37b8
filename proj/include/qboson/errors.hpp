// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qboson {

/// Invalid dimensions, indices or other out-of-contract arguments.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data that is well-formed but fails a numerical consistency check
/// (non-unitary matrix, unnormalized wavefunction, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation, e.g. fermionic
/// occupations above the nilpotency bound.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series did not reach its stopping criterion within the term cap, or two
/// evaluation routes that must agree did not.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied to a value of the wrong shape (e.g. a bipartite
/// reshape of a single-space vector).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qboson
