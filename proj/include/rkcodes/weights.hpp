#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rkcodes/code.hpp"
#include "rkcodes/cyclotomic.hpp"
#include "rkcodes/ring.hpp"

namespace rkcodes {

// ---------------------------------------------------------------------------
// Characters

/// Generating character of Z_m: x -> xi^x.
CyclotomicInt chi(std::uint32_t m, std::uint64_t x);

/// Exponent e with chi_rk(a) = xi^e, namely the sum of the idempotent
/// coordinates of a, mod m.
std::uint32_t chi_exponent(const RkElement& a);
/// Product of the base character over the idempotent coordinates.
CyclotomicInt chi_rk(const RkElement& a);

/// Sum over c in C of chi_rk(u . c). Equals |C| when u is in the dual, else 0.
CyclotomicInt character_sum_check(const LinearCode& code, const RkVector& u);

/// character_sum_check for many u against one code: the psi images of the
/// codewords are computed once, and chi_rk(u . c) is read off the pointwise
/// products of psi images.
class CharacterSum {
 public:
  explicit CharacterSum(const LinearCode& code);
  CyclotomicInt operator()(const RkVector& u) const;

 private:
  std::uint32_t m_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint32_t> images_;
};

// ---------------------------------------------------------------------------
// Hamming weight enumerator

/// counts[w] = number of codewords of Hamming weight w.
struct HammingWE {
  std::vector<std::int64_t> counts;
  friend bool operator==(const HammingWE&, const HammingWE&) = default;
};

HammingWE hamming_we(const LinearCode& code);

/// W(X + (q-1)Y, X - Y) / |C|. Throws VerificationError if a coefficient is
/// not an integer (non-linear input or wrong q).
HammingWE macwilliams_hamming(const HammingWE& we, std::uint64_t code_size, std::uint64_t q);

std::string to_string(const HammingWE& we);

// ---------------------------------------------------------------------------
// Complete weight enumerator

/// Maps a composition (n_b(c)) indexed by element index b to its count.
using Composition = std::vector<std::uint32_t>;

struct CompleteWE {
  RingSpec ring;
  std::size_t length;
  std::map<Composition, std::uint64_t> counts;
};

CompleteWE cwe(const LinearCode& code);

/// T (Euclidean) or T_H (Hermitian) as exponents: entry (a, b) is xi^exponent.
/// Rows and columns follow element index order.
class CharacterTable {
 public:
  CharacterTable(RingSpec ring, bool hermitian);
  RingSpec ring() const { return ring_; }
  bool hermitian() const { return hermitian_; }
  std::size_t size() const { return size_; }
  std::uint32_t exponent(std::size_t row, std::size_t col) const { return exponents_[row * size_ + col]; }
  CyclotomicInt entry(std::size_t row, std::size_t col) const;

 private:
  RingSpec ring_;
  bool hermitian_;
  std::size_t size_;
  std::vector<std::uint32_t> exponents_;
};

/// Default cap on |R_k| for building character tables.
inline constexpr std::uint64_t kCharacterTableLimit = 256;

struct IdentityCheck {
  bool euclidean = false;
  bool hermitian = false;
  /// True when the panel is a Kronecker substitution, which is injective on
  /// monomials of the relevant degree, so agreement proves the identity.
  bool separating = false;
  std::size_t panel_points = 0;
};

/// cwe_{C^perp}(X) = cwe_C(T X)/|C| and cwe_{C^H}(X) = cwe_C(T_H X)/|C|,
/// compared exactly on an evaluation panel.
IdentityCheck check_cwe_macwilliams(const LinearCode& code);
/// The identity for explicit enumerators: dual = code(T X) / code_size, with
/// T_H in place of T when `hermitian` is set.
bool cwe_identity_holds(const CompleteWE& code, const CompleteWE& dual, std::uint64_t code_size, bool hermitian);
bool verify_cwe_macwilliams(const LinearCode& code);

// ---------------------------------------------------------------------------
// Symmetrized weight enumerator

/// A subgroup G of the unit group of R_k.
class UnitGroup {
 public:
  /// Validates membership, the identity, closure and inverses.
  UnitGroup(RingSpec ring, std::vector<RkElement> members);
  static UnitGroup trivial(RingSpec ring);
  static UnitGroup full(RingSpec ring);

  RingSpec ring() const { return ring_; }
  const std::vector<RkElement>& members() const { return members_; }

 private:
  RingSpec ring_;
  std::vector<RkElement> members_;
};

/// Orbits of R_k under multiplication by G; representatives are the
/// lexicographically least element of each orbit, listed in increasing order.
struct ElementClasses {
  std::vector<std::uint64_t> representatives;
  /// Class number of each element, by element index.
  std::vector<std::size_t> class_of;
};

ElementClasses classify(const UnitGroup& group);

struct SymmetrizedWE {
  ElementClasses classes;
  std::map<Composition, std::uint64_t> counts;
};

SymmetrizedWE swe(const LinearCode& code, const UnitGroup& group);

/// S_{alpha,beta} = sum_{gamma ~ beta} T_{alpha,gamma}.
struct SMatrix {
  ElementClasses classes;
  /// One row per element of R_k (index order), one column per class.
  std::vector<std::vector<CyclotomicInt>> full_rows;
  /// Rows restricted to the representatives: the t x t matrix S.
  std::vector<std::vector<CyclotomicInt>> entries;
};

/// Builds S and asserts that equivalent elements have equal rows; throws
/// VerificationError otherwise.
SMatrix s_matrix(const UnitGroup& group);
bool rows_equal_on_classes(const SMatrix& s);

bool verify_swe_macwilliams(const LinearCode& code, const UnitGroup& group);

}  // namespace rkcodes
