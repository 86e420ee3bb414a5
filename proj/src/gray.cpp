#include "rkcodes/gray.hpp"

#include "rkcodes/subset_transform.hpp"

namespace rkcodes {

PsiImage psi(const RkElement& a) {
  PsiImage y(a.coeffs().begin(), a.coeffs().end());
  detail::subset_zeta(y, a.ring().modulus());
  return y;
}

RkElement psi_inv(RingSpec ring, std::span<const std::uint32_t> image) {
  if (image.size() != ring.width()) throw InputError("idempotent image has the wrong length");
  std::vector<std::uint32_t> y(image.begin(), image.end());
  for (auto& x : y) x %= ring.modulus();
  detail::subset_mobius(y, ring.modulus());
  std::vector<std::int64_t> c(y.begin(), y.end());
  return RkElement(ring, c);
}

std::size_t interleaved_to_component_major(std::size_t p, std::size_t n, std::size_t width) {
  const std::size_t symbol = p / width;
  const std::size_t coord = p % width;
  return coord * n + symbol;
}

std::vector<std::uint32_t> psi_vec(const RkVector& w, PsiLayout layout) {
  if (w.empty()) return {};
  const RingSpec ring = common_ring(w);
  const std::size_t n = w.size();
  const std::size_t width = ring.width();
  std::vector<std::uint32_t> out(n * width);
  for (std::size_t j = 0; j < n; ++j) {
    const PsiImage y = psi(w[j]);
    for (std::size_t i = 0; i < width; ++i) {
      const std::size_t p = j * width + i;
      out[layout == PsiLayout::interleaved ? p : interleaved_to_component_major(p, n, width)] = y[i];
    }
  }
  return out;
}

RkVector psi_vec_inv(RingSpec ring, std::span<const std::uint32_t> image, PsiLayout layout) {
  const std::size_t width = ring.width();
  if (image.size() % width != 0) throw InputError("image length is not a multiple of 2^k");
  const std::size_t n = image.size() / width;
  RkVector out;
  out.reserve(n);
  PsiImage y(width);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < width; ++i) {
      const std::size_t p = j * width + i;
      y[i] = image[layout == PsiLayout::interleaved ? p : interleaved_to_component_major(p, n, width)];
    }
    out.push_back(psi_inv(ring, y));
  }
  return out;
}

// ---------------------------------------------------------------------------

PhiSpec::PhiSpec(std::vector<RkElement> beta, std::vector<RkElement> beta_prime)
    : target_(beta.empty() ? RingSpec(2, 0) : beta.front().ring()),
      beta_(std::move(beta)),
      beta_prime_(std::move(beta_prime)) {
  if (beta_.empty()) throw InputError("phi map needs expansion length l >= 2");
  if (beta_.size() != beta_prime_.size()) throw InputError("beta and beta' must have equal length");
  for (const RkElement& b : beta_) {
    if (!(b.ring() == target_)) throw RingMismatch("beta entries from different rings");
  }
  for (const RkElement& b : beta_prime_) {
    if (!(b.ring() == target_)) throw RingMismatch("beta' entries from different rings");
  }
  if (target_.generators() >= kMaxGenerators) throw InputError("phi level out of range");
  if (!is_unit(beta_prime_.back())) {
    throw InputError("last beta' entry " + to_string(beta_prime_.back()) + " is not a unit");
  }
}

std::pair<RkElement, RkElement> split_top(const RkElement& a) {
  const RingSpec lower = a.ring().lower();
  const unsigned top = 1u << (a.ring().generators() - 1);
  std::vector<std::int64_t> low(lower.width()), high(lower.width());
  for (unsigned u = 0; u < lower.width(); ++u) {
    low[u] = a.coeff(u);
    high[u] = a.coeff(u | top);
  }
  return {RkElement(lower, low), RkElement(lower, high)};
}

RkVector phi(const PhiSpec& spec, const RkElement& a) {
  if (!(a.ring() == spec.source_ring())) {
    throw RingMismatch("phi_" + std::to_string(spec.level()) + " expects an element of " +
                       to_string(spec.source_ring()) + ", got " + to_string(a.ring()));
  }
  const auto [a1, a2] = split_top(a);
  RkVector out;
  out.reserve(spec.length());
  out.push_back(a1);
  for (std::size_t r = 0; r < spec.beta().size(); ++r) {
    out.push_back(spec.beta()[r] * a1 + spec.beta_prime()[r] * a2);
  }
  return out;
}

RkVector phi_vec(const PhiSpec& spec, const RkVector& w) {
  const std::size_t n = w.size();
  const std::size_t l = spec.length();
  RkVector out(n * l, RkElement(spec.target_ring()));
  for (std::size_t j = 0; j < n; ++j) {
    const RkVector image = phi(spec, w[j]);
    for (std::size_t r = 0; r < l; ++r) out[r * n + j] = image[r];
  }
  return out;
}

RkVector phi_chain(std::span<const PhiSpec> specs, const RkVector& w) {
  RkVector current = w;
  for (const PhiSpec& spec : specs) current = phi_vec(spec, current);
  if (!current.empty() && common_ring(current).generators() != 0) {
    throw InputError("phi chain does not reach the base ring; a level is missing");
  }
  return current;
}

}  // namespace rkcodes
