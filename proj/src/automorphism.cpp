#include "rkcodes/automorphism.hpp"

#include <numeric>

#include "rkcodes/gray.hpp"

namespace rkcodes {

namespace {

void check_perm(std::span<const int> perm, int generators) {
  if (static_cast<int>(perm.size()) != generators) {
    throw InputError("permutation must list " + std::to_string(generators) + " images");
  }
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= generators || seen[p]) throw InputError("not a permutation of {1..k}");
    seen[p] = true;
  }
}

unsigned permute_mask(std::span<const int> perm, unsigned mask) {
  unsigned out = 0;
  for (std::size_t t = 0; t < perm.size(); ++t) {
    if (mask & (1u << t)) out |= 1u << perm[t];
  }
  return out;
}

}  // namespace

RkElement apply_theta(unsigned flip_mask, const RkElement& a) {
  const RingSpec& ring = a.ring();
  if (flip_mask >= ring.width()) throw InputError("flip set not contained in {1..k}");
  const std::uint32_t m = ring.modulus();
  std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
  for (int i = 0; i < ring.generators(); ++i) {
    const unsigned bit = 1u << i;
    if (!(flip_mask & bit)) continue;
    // v_U -> v_{U \ {i}} - v_U for every U containing i.
    for (unsigned u = 0; u < ring.width(); ++u) {
      if (!(u & bit)) continue;
      c[u ^ bit] = (c[u ^ bit] + c[u]) % m;
      c[u] = (m - c[u]) % m;
    }
  }
  return RkElement(ring, c);
}

RkElement apply_phi(std::span<const int> perm, const RkElement& a) {
  const RingSpec& ring = a.ring();
  check_perm(perm, ring.generators());
  std::vector<std::int64_t> c(ring.width(), 0);
  for (unsigned u = 0; u < ring.width(); ++u) c[permute_mask(perm, u)] = a.coeff(u);
  return RkElement(ring, c);
}

int order_of_perm(std::span<const int> perm) {
  std::vector<bool> visited(perm.size(), false);
  int order = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(perm[i])) {
      visited[i] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

// ---------------------------------------------------------------------------

Automorphism::Automorphism(int generators)
    : generators_(generators), flip_mask_(0), perm_(static_cast<std::size_t>(generators)) {
  if (generators < 0 || generators > kMaxGenerators) throw InputError("invalid generator count");
  std::iota(perm_.begin(), perm_.end(), 0);
}

Automorphism::Automorphism(int generators, unsigned flip_mask, std::vector<int> perm)
    : generators_(generators), flip_mask_(flip_mask), perm_(std::move(perm)) {
  if (generators < 0 || generators > kMaxGenerators) throw InputError("invalid generator count");
  if (flip_mask >= (1u << generators)) throw InputError("flip set not contained in {1..k}");
  check_perm(perm_, generators);
}

Automorphism Automorphism::from_one_based(int generators, std::span<const int> flip,
                                          std::span<const int> perm) {
  unsigned mask = 0;
  for (int i : flip) {
    if (i < 1 || i > generators) throw InputError("flip index out of range");
    mask |= 1u << (i - 1);
  }
  std::vector<int> p;
  if (perm.empty()) {
    p.resize(static_cast<std::size_t>(generators));
    std::iota(p.begin(), p.end(), 0);
  } else {
    for (int x : perm) p.push_back(x - 1);
  }
  return Automorphism(generators, mask, std::move(p));
}

bool Automorphism::is_identity() const { return *this == Automorphism(generators_); }

RkElement Automorphism::operator()(const RkElement& a) const {
  if (a.ring().generators() != generators_) {
    throw RingMismatch("automorphism of R_" + std::to_string(generators_) +
                       " applied to an element of " + to_string(a.ring()));
  }
  return apply_theta(flip_mask_, apply_phi(perm_, a));
}

RkVector Automorphism::operator()(const RkVector& w) const {
  RkVector out;
  out.reserve(w.size());
  for (const RkElement& x : w) out.push_back((*this)(x));
  return out;
}

// Theta_S Phi_p Theta_T Phi_q = Theta_{S xor p(T)} Phi_{p q}.
Automorphism Automorphism::compose(const Automorphism& inner) const {
  if (inner.generators_ != generators_) throw RingMismatch("composing automorphisms of different rings");
  std::vector<int> p(perm_.size());
  for (std::size_t t = 0; t < p.size(); ++t) p[t] = perm_[static_cast<std::size_t>(inner.perm_[t])];
  const unsigned flip = flip_mask_ ^ permute_mask(perm_, inner.flip_mask_);
  return Automorphism(generators_, flip, std::move(p));
}

Automorphism Automorphism::power(int exponent) const {
  if (exponent < 0) throw InputError("negative automorphism power");
  Automorphism acc(generators_);
  for (int i = 0; i < exponent; ++i) acc = compose(acc);
  return acc;
}

int Automorphism::order() const {
  Automorphism acc = *this;
  int t = 1;
  while (!acc.is_identity()) {
    acc = compose(acc);
    ++t;
  }
  return t;
}

// ---------------------------------------------------------------------------

CoordinatePermutation::CoordinatePermutation(std::vector<std::size_t> targets)
    : targets_(std::move(targets)) {
  std::vector<bool> seen(targets_.size(), false);
  for (std::size_t t : targets_) {
    if (t >= targets_.size() || seen[t]) throw InputError("not a coordinate permutation");
    seen[t] = true;
  }
}

CoordinatePermutation CoordinatePermutation::identity(std::size_t size) {
  std::vector<std::size_t> t(size);
  std::iota(t.begin(), t.end(), std::size_t{0});
  return CoordinatePermutation(std::move(t));
}

CoordinatePermutation CoordinatePermutation::power(int exponent) const {
  std::vector<std::size_t> t(targets_.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t j = i;
    for (int e = 0; e < exponent; ++e) j = targets_[j];
    t[i] = j;
  }
  return CoordinatePermutation(std::move(t));
}

CoordinatePermutation induced_map(const Automorphism& theta, RingSpec ring) {
  if (theta.generators() != ring.generators()) throw RingMismatch("automorphism/ring mismatch");
  const std::size_t w = ring.width();
  const std::uint32_t m = ring.modulus();
  std::vector<std::size_t> targets(w, w);
  for (std::size_t i = 0; i < w; ++i) {
    for (std::uint32_t value = 1; value < m; ++value) {
      PsiImage probe(w, 0);
      probe[i] = value;
      const PsiImage image = psi(theta(psi_inv(ring, probe)));
      std::size_t hit = w;
      for (std::size_t j = 0; j < w; ++j) {
        if (image[j] == 0) continue;
        if (hit != w || image[j] != value) {
          throw VerificationError("automorphism does not act on idempotent coordinates by permutation");
        }
        hit = j;
      }
      if (hit == w || (targets[i] != w && targets[i] != hit)) {
        throw VerificationError("automorphism does not act on idempotent coordinates by permutation");
      }
      targets[i] = hit;
    }
  }
  CoordinatePermutation rho(std::move(targets));

  std::uint64_t q = 0;
  if (checked_pow(m, w, q) && q <= kInducedMapVerifyLimit) {
    for (const RkElement& a : elements(ring)) {
      const PsiImage before = psi(a);
      if (psi(theta(a)) != rho.apply<std::uint32_t>(before)) {
        throw VerificationError("induced coordinate map fails on " + to_string(a));
      }
    }
  }
  return rho;
}

}  // namespace rkcodes
