#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rkcodes/automorphism.hpp"
#include "rkcodes/code.hpp"
#include "rkcodes/errors.hpp"

namespace rkcodes {

/// Length n split into d contiguous blocks of length n / d.
struct ShiftSpec {
  ShiftSpec(std::size_t n, std::size_t d);
  std::size_t n;
  std::size_t d;
  std::size_t block_length() const { return d == 0 ? 0 : n / d; }
};

/// T_theta^d on words of length n.
struct SkewShiftSpec {
  SkewShiftSpec(std::size_t n, std::size_t d, Automorphism theta);
  std::size_t n;
  std::size_t d;
  Automorphism theta;
};

/// Outcome of a structural check; `witness` is a codeword whose image falls
/// outside the code when the check fails.
struct Verdict {
  std::string check;
  bool holds = false;
  std::optional<RkVector> witness;
};

/// out[(i + r) mod n] = w[i].
template <typename T>
std::vector<T> rotate_right(std::span<const T> w, std::size_t r) {
  std::vector<T> out(w.begin(), w.end());
  if (!w.empty()) {
    for (std::size_t i = 0; i < w.size(); ++i) out[(i + r) % w.size()] = w[i];
  }
  return out;
}

RkVector sigma_d(const ShiftSpec& spec, const RkVector& w);

Verdict check_quasi_cyclic(const LinearCode& code, std::size_t d);
bool is_quasi_cyclic(const LinearCode& code, std::size_t d);
bool is_cyclic(const LinearCode& code);

/// T_theta: rotate right by one, then apply theta to every symbol.
RkVector skew_shift_once(const Automorphism& theta, const RkVector& w);
/// The d-th iterate of T_theta.
RkVector skew_shift(const SkewShiftSpec& spec, const RkVector& w);

Verdict check_quasi_skew_cyclic(const LinearCode& code, const SkewShiftSpec& spec);
bool is_quasi_skew_cyclic(const LinearCode& code, const SkewShiftSpec& spec);

/// Same property computed on the interleaved psi image: the induced map of
/// theta^d on every symbol block, then a plain rotation by d * 2^k.
Verdict psi_image_check(const LinearCode& code, const SkewShiftSpec& spec);

/// Raised when the component codes handed to algorithm1_construct violate a
/// precondition; one message per violated inclusion.
class PreconditionError : public VerificationError {
 public:
  explicit PreconditionError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct Algorithm1Result {
  LinearCode code;
  Verdict certificate;
};

/// Lists the violated preconditions (empty when all hold):
///  - every C_i is invariant under rotation by d * ord(pi);
///  - rotation by d maps C_i into C_{rho(i)}, rho the induced map of theta^d.
std::vector<std::string> algorithm1_violations(RingSpec ring, std::size_t n, std::size_t d,
                                               const Automorphism& theta,
                                               std::span<const LinearCode> components);

/// Composes the components and certifies the result with
/// check_quasi_skew_cyclic. Throws PreconditionError, or VerificationError
/// when certification fails.
Algorithm1Result algorithm1_construct(RingSpec ring, std::size_t n, std::size_t d, const Automorphism& theta,
                                      std::span<const LinearCode> components);

/// Whether phi_vec(spec, C) is quasi-cyclic of index l_j * d.
bool phi_image_quasicyclic_check(const LinearCode& code, const PhiSpec& spec, std::size_t d);
/// Whether the chain image over Z_m is quasi-cyclic of index d * l_1 ... l_k.
bool phi_chain_quasicyclic_check(const LinearCode& code, std::span<const PhiSpec> specs, std::size_t d);

}  // namespace rkcodes
