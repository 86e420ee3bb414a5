#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rkcodes/errors.hpp"

namespace rkcodes {

// Largest supported number of idempotent generators.
inline constexpr int kMaxGenerators = 4;
inline constexpr std::size_t kMaxWidth = std::size_t{1} << kMaxGenerators;

/// The ring R_k = Z_m[v_1, ..., v_k] with v_i^2 = v_i.
///
/// Elements are stored in the monomial basis {v_U : U subset of {1..k}}.
/// Bit (i-1) of a mask U stands for v_i; mask 0 is the constant term.
class RingSpec {
 public:
  RingSpec(std::uint32_t modulus, int generators);

  std::uint32_t modulus() const { return modulus_; }
  int generators() const { return generators_; }
  /// Number of monomials, 2^k.
  std::size_t width() const { return std::size_t{1} << generators_; }

  /// m^(2^k). Throws GuardExceeded if the value does not fit in 64 bits.
  std::uint64_t cardinality() const;

  /// Z_m, the ring with no idempotent generators.
  RingSpec base() const { return RingSpec(modulus_, 0); }
  /// R_{k-1}; requires k >= 1.
  RingSpec lower() const;
  /// R_{k+1}; requires k < kMaxGenerators.
  RingSpec raised() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::uint32_t modulus_;
  int generators_;
};

std::string to_string(const RingSpec& ring);

class RkElement {
 public:
  /// The zero element of `ring`.
  explicit RkElement(RingSpec ring);
  /// Coefficients in bitmask order; values are reduced mod m (negatives allowed).
  RkElement(RingSpec ring, std::span<const std::int64_t> coeffs);
  RkElement(RingSpec ring, std::initializer_list<std::int64_t> coeffs);

  static RkElement zero(RingSpec ring) { return RkElement(ring); }
  static RkElement one(RingSpec ring);
  static RkElement constant(RingSpec ring, std::int64_t value);
  /// value * v_U.
  static RkElement monomial(RingSpec ring, unsigned mask, std::int64_t value = 1);
  /// Inverse of index().
  static RkElement from_index(RingSpec ring, std::uint64_t index);

  const RingSpec& ring() const { return ring_; }
  std::uint32_t coeff(unsigned mask) const { return coeffs_[mask]; }
  std::span<const std::uint32_t> coeffs() const { return {coeffs_.data(), ring_.width()}; }
  bool is_zero() const;

  /// Mixed-radix position with the constant coefficient most significant, so
  /// index order coincides with lexicographic order on coefficient lists.
  std::uint64_t index() const;

  RkElement& operator+=(const RkElement& other);
  RkElement& operator-=(const RkElement& other);
  RkElement& operator*=(const RkElement& other);

  friend RkElement operator+(RkElement a, const RkElement& b) { return a += b; }
  friend RkElement operator-(RkElement a, const RkElement& b) { return a -= b; }
  friend RkElement operator*(RkElement a, const RkElement& b) { return a *= b; }
  friend RkElement operator-(const RkElement& a);
  /// Multiplication by an integer scalar.
  friend RkElement operator*(std::int64_t scalar, const RkElement& a);

  friend bool operator==(const RkElement& a, const RkElement& b);
  friend std::strong_ordering operator<=>(const RkElement& a, const RkElement& b);

 private:
  void check_same_ring(const RkElement& other) const;

  RingSpec ring_;
  std::array<std::uint32_t, kMaxWidth> coeffs_{};
};

using RkVector = std::vector<RkElement>;

RkElement add(const RkElement& a, const RkElement& b);
RkElement mul(const RkElement& a, const RkElement& b);

/// Every coordinate of the idempotent decomposition is invertible mod m.
bool is_unit(const RkElement& a);
/// Brute-force search for b with a*b = 1.
bool has_inverse_by_search(const RkElement& a);
RkElement inverse(const RkElement& a);

/// All m^(2^k) elements in index order. Guarded by the enumeration cap.
std::vector<RkElement> elements(RingSpec ring);
std::vector<RkElement> units(RingSpec ring);
/// Number of invertible residues mod m.
std::uint64_t count_residue_units(std::uint32_t m);

std::uint32_t residue_inverse(std::uint32_t x, std::uint32_t m);
bool residue_is_unit(std::uint32_t x, std::uint32_t m);

/// "1+3v" for k = 1, "2+v1+3v1v2" for k >= 2, plain integers for k = 0.
std::string to_string(const RkElement& a);

// Vectors over R_k.
RkVector zero_vector(RingSpec ring, std::size_t n);
RkVector add(const RkVector& a, const RkVector& b);
RkVector scale(const RkElement& lambda, const RkVector& w);
RkElement dot(const RkVector& a, const RkVector& b);
bool is_zero(const RkVector& w);
std::string to_string(const RkVector& w);

/// Ring of the entries; throws RingMismatch when entries disagree.
RingSpec common_ring(const RkVector& w);

}  // namespace rkcodes
