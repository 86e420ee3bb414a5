#include "rkcodes/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rkcodes/gray.hpp"

namespace rkcodes {

ShiftSpec::ShiftSpec(std::size_t n_, std::size_t d_) : n(n_), d(d_) {
  if (d == 0) throw InputError("shift index must be at least 1");
  if (n % d != 0) {
    throw InputError("index " + std::to_string(d) + " does not divide length " + std::to_string(n));
  }
}

SkewShiftSpec::SkewShiftSpec(std::size_t n_, std::size_t d_, Automorphism theta_)
    : n(n_), d(d_), theta(std::move(theta_)) {
  ShiftSpec check(n, d);
  (void)check;
}

RkVector sigma_d(const ShiftSpec& spec, const RkVector& w) {
  if (w.size() != spec.n) throw InputError("word length does not match the shift spec");
  const std::size_t len = spec.block_length();
  RkVector out = w;
  for (std::size_t b = 0; b < spec.d; ++b) {
    for (std::size_t i = 0; i < len; ++i) out[b * len + (i + 1) % len] = w[b * len + i];
  }
  return out;
}

namespace {

// Checks f(C) = C for a map f that is a bijection on words.
template <typename F>
Verdict invariance(std::string name, const LinearCode& code, F f) {
  Verdict v{std::move(name), true, std::nullopt};
  std::vector<RkVector> image;
  image.reserve(code.size());
  for (const RkVector& c : code.codewords()) {
    RkVector fc = f(c);
    if (v.holds && !code.contains(fc)) {
      v.holds = false;
      v.witness = c;
    }
    image.push_back(std::move(fc));
  }
  if (v.holds) {
    std::sort(image.begin(), image.end());
    v.holds = image == code.codewords();
  }
  return v;
}

void check_theta_ring(const Automorphism& theta, const LinearCode& code) {
  if (theta.generators() != code.ring().generators()) {
    throw RingMismatch("automorphism acts on " + std::to_string(theta.generators()) +
                       " generators, code is over " + to_string(code.ring()));
  }
}

}  // namespace

Verdict check_quasi_cyclic(const LinearCode& code, std::size_t d) {
  const ShiftSpec spec(code.length(), d);
  return invariance("quasi-cyclic of index " + std::to_string(d), code,
                    [&](const RkVector& c) { return sigma_d(spec, c); });
}

bool is_quasi_cyclic(const LinearCode& code, std::size_t d) { return check_quasi_cyclic(code, d).holds; }

bool is_cyclic(const LinearCode& code) { return is_quasi_cyclic(code, 1); }

RkVector skew_shift_once(const Automorphism& theta, const RkVector& w) {
  RkVector out = rotate_right<RkElement>(w, 1);
  for (RkElement& x : out) x = theta(x);
  return out;
}

RkVector skew_shift(const SkewShiftSpec& spec, const RkVector& w) {
  if (w.size() != spec.n) throw InputError("word length does not match the shift spec");
  RkVector out = w;
  for (std::size_t i = 0; i < spec.d; ++i) out = skew_shift_once(spec.theta, out);
  return out;
}

Verdict check_quasi_skew_cyclic(const LinearCode& code, const SkewShiftSpec& spec) {
  check_theta_ring(spec.theta, code);
  if (spec.n != code.length()) throw InputError("shift spec length does not match the code");
  Verdict v{"quasi-theta-cyclic of index " + std::to_string(spec.d), true, std::nullopt};
  for (const RkVector& c : code.codewords()) {
    if (!code.contains(skew_shift(spec, c))) {
      v.holds = false;
      v.witness = c;
      break;
    }
  }
  return v;
}

bool is_quasi_skew_cyclic(const LinearCode& code, const SkewShiftSpec& spec) {
  return check_quasi_skew_cyclic(code, spec).holds;
}

Verdict psi_image_check(const LinearCode& code, const SkewShiftSpec& spec) {
  check_theta_ring(spec.theta, code);
  if (spec.n != code.length()) throw InputError("shift spec length does not match the code");
  const RingSpec ring = code.ring();
  const std::size_t width = ring.width();
  const CoordinatePermutation rho =
      induced_map(spec.theta.power(static_cast<int>(spec.d % std::max(1, spec.theta.order()))), ring);

  std::vector<std::vector<std::uint32_t>> images;
  images.reserve(code.size());
  for (const RkVector& c : code.codewords()) images.push_back(psi_vec(c, PsiLayout::interleaved));
  const std::set<std::vector<std::uint32_t>> image_set(images.begin(), images.end());

  Verdict v{"psi image of quasi-theta-cyclic of index " + std::to_string(spec.d), true, std::nullopt};
  for (std::size_t idx = 0; idx < images.size(); ++idx) {
    std::vector<std::uint32_t> moved(images[idx].size());
    for (std::size_t s = 0; s < code.length(); ++s) {
      const std::span<const std::uint32_t> block(images[idx].data() + s * width, width);
      const std::vector<std::uint32_t> mapped = rho.apply(block);
      std::copy(mapped.begin(), mapped.end(), moved.begin() + s * width);
    }
    if (!image_set.contains(rotate_right<std::uint32_t>(moved, spec.d * width))) {
      v.holds = false;
      v.witness = code.codewords()[idx];
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const std::string& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

std::string component_name(std::size_t i) { return "C_" + std::to_string(i + 1); }

// First codeword of `from` whose rotation by r is not in `into`.
std::optional<RkVector> rotation_escape(const LinearCode& from, const LinearCode& into, std::size_t r) {
  for (const RkVector& c : from.codewords()) {
    if (!into.contains(rotate_right<RkElement>(c, r))) return c;
  }
  return std::nullopt;
}

}  // namespace

PreconditionError::PreconditionError(std::vector<std::string> violations)
    : VerificationError("component codes violate the construction preconditions: " + join(violations)),
      violations_(std::move(violations)) {}

std::vector<std::string> algorithm1_violations(RingSpec ring, std::size_t n, std::size_t d,
                                               const Automorphism& theta,
                                               std::span<const LinearCode> components) {
  if (theta.generators() != ring.generators()) throw RingMismatch("automorphism and ring disagree on k");
  if (components.size() != ring.width()) {
    throw InputError("expected " + std::to_string(ring.width()) + " component codes, got " +
                     std::to_string(components.size()));
  }
  for (const LinearCode& c : components) {
    if (!(c.ring() == ring.base())) throw RingMismatch("component codes must be over Z_m");
    if (c.length() != n) throw InputError("component code length differs from n");
  }
  const SkewShiftSpec spec(n, d, theta);
  const std::size_t ord = static_cast<std::size_t>(order_of_perm(theta.perm()));
  const CoordinatePermutation rho =
      induced_map(theta.power(static_cast<int>(d % static_cast<std::size_t>(theta.order()))), ring);

  std::vector<std::string> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (auto w = rotation_escape(components[i], components[i], d * ord)) {
      out.push_back(component_name(i) + " is not invariant under rotation by " + std::to_string(d * ord) +
                    " (witness " + to_string(*w) + ")");
    }
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::size_t j = rho.target(i);
    if (auto w = rotation_escape(components[i], components[j], d)) {
      out.push_back("rotation by " + std::to_string(d) + " of " + component_name(i) + " is not contained in " +
                    component_name(j) + " (witness " + to_string(*w) + ")");
    }
  }
  return out;
}

Algorithm1Result algorithm1_construct(RingSpec ring, std::size_t n, std::size_t d, const Automorphism& theta,
                                      std::span<const LinearCode> components) {
  std::vector<std::string> violations = algorithm1_violations(ring, n, d, theta, components);
  if (!violations.empty()) throw PreconditionError(std::move(violations));
  LinearCode code = compose(ring, components);
  Verdict certificate = check_quasi_skew_cyclic(code, SkewShiftSpec(n, d, theta));
  if (!certificate.holds) {
    throw VerificationError("constructed code is not quasi-theta-cyclic; witness " +
                            to_string(*certificate.witness));
  }
  return {std::move(code), std::move(certificate)};
}

// ---------------------------------------------------------------------------

bool phi_image_quasicyclic_check(const LinearCode& code, const PhiSpec& spec, std::size_t d) {
  const ShiftSpec check(code.length(), d);
  (void)check;
  return is_quasi_cyclic(phi_image(code, spec), spec.length() * d);
}

bool phi_chain_quasicyclic_check(const LinearCode& code, std::span<const PhiSpec> specs, std::size_t d) {
  const ShiftSpec check(code.length(), d);
  (void)check;
  std::size_t index = d;
  for (const PhiSpec& s : specs) index *= s.length();
  return is_quasi_cyclic(phi_chain_image(code, specs), index);
}

}  // namespace rkcodes
