#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rkcodes {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);

/// Exact element of Z[xi] = Z[x]/Phi_m(x), xi a primitive m-th root of unity.
///
/// Stored as the coefficient vector of the reduced representative, of length
/// deg Phi_m. Arithmetic is overflow-checked and throws std::overflow_error.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(std::uint32_t order);
  static CyclotomicInt integer(std::uint32_t order, std::int64_t value);
  /// xi^e.
  static CyclotomicInt root_power(std::uint32_t order, std::uint64_t exponent);
  /// Sum_e counts[e] * xi^e for e in [0, m).
  static CyclotomicInt from_root_counts(std::uint32_t order, std::span<const std::int64_t> counts);

  std::uint32_t order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True when the value lies in Z; stores it in `out`.
  bool is_integer(std::int64_t& out) const;

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(std::int64_t scalar);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  friend CyclotomicInt operator*(std::int64_t s, CyclotomicInt a) { return a *= s; }

  /// Exact division by an integer; throws std::domain_error when inexact.
  CyclotomicInt divided_by(std::int64_t divisor) const;

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  void check_order(const CyclotomicInt& other) const;

  std::uint32_t order_;
  std::vector<std::int64_t> coeffs_;
};

/// Polynomial in the root, e.g. "1 + 2x - x^2" (x standing for xi).
std::string to_string(const CyclotomicInt& z);

}  // namespace rkcodes
