#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rkcodes {

// Malformed input: bad literals, mismatched rings, invalid specs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration would materialize more objects than the configured cap.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed identity or structural check did not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distance of a code that has no nonzero codeword.
class NoNonzeroCodeword : public std::domain_error {
 public:
  NoNonzeroCodeword() : std::domain_error("no nonzero codeword") {}
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

// Throws GuardExceeded when count > enumeration_cap().
void require_within_cap(std::uint64_t count, std::string_view what);

// Overflow-checked arithmetic; false on overflow.
bool checked_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t& out);
bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out);

}  // namespace rkcodes
