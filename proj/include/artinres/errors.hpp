#pragma once

#include <stdexcept>
#include <string>

namespace artinres {

/// Malformed or inconsistent input (bad monomial text, ring mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured step or size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its mathematical precondition
/// (non-artinian ring for the artinian engine, non-CM ideal for a CM-only formula).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace artinres
