#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rkcodes/ring.hpp"

namespace rkcodes {

/// Theta_S: substitute v_i -> 1 - v_i for every i in S (bit i-1 of `flip_mask`).
RkElement apply_theta(unsigned flip_mask, const RkElement& a);

/// Phi_pi: moves the coefficient of v_U to v_{pi(U)}. `perm` holds 0-based images.
RkElement apply_phi(std::span<const int> perm, const RkElement& a);

/// Least t >= 1 with perm^t = id.
int order_of_perm(std::span<const int> perm);

/// theta = Theta_S o Phi_pi on R_k, base-ring automorphism fixed to the identity.
///
/// Any permutation pi qualifies: S1 is its support and S2 = pi(S1). Products of
/// automorphisms stay in this normal form because
/// Phi_pi o Theta_S = Theta_{pi(S)} o Phi_pi.
class Automorphism {
 public:
  /// Identity on R_k.
  explicit Automorphism(int generators);
  Automorphism(int generators, unsigned flip_mask, std::vector<int> perm);
  /// 1-based flip list and 1-based permutation image list, as in the JSON form.
  static Automorphism from_one_based(int generators, std::span<const int> flip,
                                     std::span<const int> perm);

  int generators() const { return generators_; }
  unsigned flip_mask() const { return flip_mask_; }
  const std::vector<int>& perm() const { return perm_; }
  bool is_identity() const;

  /// Theta_S(Phi_pi(a)).
  RkElement operator()(const RkElement& a) const;
  RkVector operator()(const RkVector& w) const;

  /// (*this) o inner.
  Automorphism compose(const Automorphism& inner) const;
  Automorphism power(int exponent) const;
  /// Order of the automorphism itself (not just of pi).
  int order() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  int generators_;
  unsigned flip_mask_;
  std::vector<int> perm_;
};

/// Permutation of the 2^k idempotent coordinates: coordinate i of the input
/// lands at position target(i) of the output.
class CoordinatePermutation {
 public:
  explicit CoordinatePermutation(std::vector<std::size_t> targets);
  static CoordinatePermutation identity(std::size_t size);

  std::size_t size() const { return targets_.size(); }
  std::size_t target(std::size_t i) const { return targets_[i]; }
  const std::vector<std::size_t>& targets() const { return targets_; }

  template <typename T>
  std::vector<T> apply(std::span<const T> in) const {
    std::vector<T> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[targets_[i]] = in[i];
    return out;
  }

  CoordinatePermutation power(int exponent) const;
  friend bool operator==(const CoordinatePermutation&, const CoordinatePermutation&) = default;

 private:
  std::vector<std::size_t> targets_;
};

/// The map rho with psi(theta(a)) = rho(psi(a)), found by conjugating theta
/// with psi on one-hot probes. Verified on every element when the ring has at
/// most kInducedMapVerifyLimit elements. Throws VerificationError if the
/// conjugate is not a pure coordinate permutation.
CoordinatePermutation induced_map(const Automorphism& theta, RingSpec ring);

inline constexpr std::uint64_t kInducedMapVerifyLimit = 4096;

}  // namespace rkcodes
