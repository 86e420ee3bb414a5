#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rkcodes/ring.hpp"

namespace rkcodes {

/// Idempotent coordinates of an element: position T holds sum_{S subset T} a_S.
/// Positions follow bitmask order (empty set first).
using PsiImage = std::vector<std::uint32_t>;

PsiImage psi(const RkElement& a);
RkElement psi_inv(RingSpec ring, std::span<const std::uint32_t> image);

enum class PsiLayout {
  /// (psi(a_1), psi(a_2), ..., psi(a_n)).
  interleaved,
  /// Row i collects the i-th coordinate of every symbol; rows concatenated.
  component_major,
};

std::vector<std::uint32_t> psi_vec(const RkVector& w, PsiLayout layout);
RkVector psi_vec_inv(RingSpec ring, std::span<const std::uint32_t> image, PsiLayout layout);

/// Position in the component-major layout of interleaved position p.
std::size_t interleaved_to_component_major(std::size_t p, std::size_t n, std::size_t width);

/// Parameters of the expansion map phi_j : R_j -> R_{j-1}^l,
///   a1 + a2 v_j  |->  (a1, b_1 a1 + b'_1 a2, ..., b_{l-1} a1 + b'_{l-1} a2).
/// All beta entries live in R_{j-1}; the last beta' must be a unit so the map
/// is injective.
class PhiSpec {
 public:
  PhiSpec(std::vector<RkElement> beta, std::vector<RkElement> beta_prime);

  /// j: the map goes from R_j down to R_{j-1}.
  int level() const { return target_.generators() + 1; }
  /// l_j, the expansion factor.
  std::size_t length() const { return beta_.size() + 1; }
  RingSpec source_ring() const { return target_.raised(); }
  RingSpec target_ring() const { return target_; }
  const std::vector<RkElement>& beta() const { return beta_; }
  const std::vector<RkElement>& beta_prime() const { return beta_prime_; }

 private:
  RingSpec target_;
  std::vector<RkElement> beta_;
  std::vector<RkElement> beta_prime_;
};

/// Splits a in R_j as a1 + a2 v_j with a1, a2 in R_{j-1}.
std::pair<RkElement, RkElement> split_top(const RkElement& a);

RkVector phi(const PhiSpec& spec, const RkElement& a);

/// Block-major extension: block r holds the r-th phi coordinate of all n symbols.
RkVector phi_vec(const PhiSpec& spec, const RkVector& w);

/// phi_1 o ... o phi_k applied to a word over R_k. specs[0] is the level-k map,
/// specs.back() the level-1 map. An empty list is the identity on R_0 words.
RkVector phi_chain(std::span<const PhiSpec> specs, const RkVector& w);

}  // namespace rkcodes
