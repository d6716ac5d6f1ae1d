#pragma once

#include <stdexcept>
#include <string>

namespace spinacc {

// Error taxonomy shared by the whole engine. Every failure mode a caller can
// recover from gets its own type; anything else is a plain logic_error.

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A rational entry has a denominator divisible by the working prime.
struct denominator_divides_p : std::runtime_error {
  explicit denominator_divides_p(const std::string& what) : std::runtime_error(what) {}
};

// A working prime produced data inconsistent with the second prime.
struct bad_prime : std::runtime_error {
  explicit bad_prime(const std::string& what) : std::runtime_error(what) {}
};

// Group closure exceeded the configured element budget.
struct closure_exceeded : std::runtime_error {
  explicit closure_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A provided spin lift does not project onto its SO(n) generator.
struct lift_mismatch : std::runtime_error {
  explicit lift_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// The orthogonal change of basis needs a square root outside the base field.
struct basis_unavailable : std::runtime_error {
  explicit basis_unavailable(const std::string& what) : std::runtime_error(what) {}
};

// Input data violates a stated hypothesis of a constructive splitting.
struct hypothesis_failed : std::runtime_error {
  explicit hypothesis_failed(const std::string& what) : std::runtime_error(what) {}
};

// A certificate failed independent verification.
struct certificate_error : std::runtime_error {
  explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinacc
