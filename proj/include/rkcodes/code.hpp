#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rkcodes/gray.hpp"
#include "rkcodes/ring.hpp"

namespace rkcodes {

/// A linear code over R_k (an R_k-submodule of R_k^n), stored extensionally.
///
/// Codewords are kept sorted lexicographically on coefficient lists; the
/// generators are kept as given (span) or derived greedily (from_codewords).
class LinearCode {
 public:
  static LinearCode span(RingSpec ring, std::size_t n, std::vector<RkVector> generators);
  /// Builds a code from an explicit word set. Throws VerificationError when
  /// the set is not a submodule.
  static LinearCode from_codewords(RingSpec ring, std::size_t n, std::vector<RkVector> words);
  static LinearCode zero(RingSpec ring, std::size_t n);
  static LinearCode full(RingSpec ring, std::size_t n);

  const RingSpec& ring() const { return ring_; }
  std::size_t length() const { return n_; }
  const std::vector<RkVector>& generators() const { return generators_; }
  const std::vector<RkVector>& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }
  bool contains(const RkVector& w) const;
  bool is_zero() const { return codewords_.size() == 1; }

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  LinearCode(RingSpec ring, std::size_t n) : ring_(ring), n_(n) {}

  RingSpec ring_;
  std::size_t n_;
  std::vector<RkVector> generators_;
  std::vector<RkVector> codewords_;
};

/// Iterates over R_k^n in lexicographic order; guarded by the enumeration cap.
class AmbientSpace {
 public:
  AmbientSpace(RingSpec ring, std::size_t n);
  std::uint64_t size() const { return size_; }
  template <typename F>
  void for_each(F&& f) const {
    if (n_ == 0) {
      f(RkVector{});
      return;
    }
    std::vector<std::size_t> digits(n_, 0);
    RkVector w(n_, elements_.front());
    while (true) {
      f(static_cast<const RkVector&>(w));
      std::size_t pos = n_;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < elements_.size()) {
          w[pos] = elements_[digits[pos]];
          break;
        }
        digits[pos] = 0;
        w[pos] = elements_.front();
        if (pos == 0) return;
      }
    }
  }

 private:
  std::size_t n_;
  std::uint64_t size_;
  std::vector<RkElement> elements_;
};

/// Sum_i a_i * Theta_{1..k}(b_i).
RkElement hermitian_product(const RkVector& a, const RkVector& b);
RkElement conjugate(const RkElement& a);

LinearCode euclidean_dual(const LinearCode& code);
LinearCode hermitian_dual(const LinearCode& code);
bool is_self_dual(const LinearCode& code);
bool is_hermitian_self_dual(const LinearCode& code);

/// <v_i> x ... x <v_i> (n factors); `index` is the 1-based generator i.
LinearCode hermitian_selfdual_construct(RingSpec ring, std::size_t n, int index);

/// Codes over Z_m, one per idempotent coordinate (bitmask order).
using ComponentCodes = std::vector<LinearCode>;

/// Rows of the component-major psi image; throws VerificationError if the
/// image of the code is not the product of its rows.
ComponentCodes decompose(const LinearCode& code);
/// Inverse psi image of C_1 x ... x C_{2^k}.
LinearCode compose(RingSpec ring, std::span<const LinearCode> components);

std::size_t hamming_weight(const RkVector& w);
/// Sum of base Lee weights min(x, m - x) over all idempotent coordinates.
std::uint64_t lee_weight(const RkElement& a);
std::uint64_t lee_weight(const RkVector& w);
/// Throw NoNonzeroCodeword for the zero code.
std::size_t hamming_distance(const LinearCode& code);
std::uint64_t lee_distance(const LinearCode& code);

/// phi_vec image of a code, as a linear code over R_{j-1}.
LinearCode phi_image(const LinearCode& code, const PhiSpec& spec);
/// Image under the full chain down to Z_m.
LinearCode phi_chain_image(const LinearCode& code, std::span<const PhiSpec> specs);

}  // namespace rkcodes
