#include "rkcodes/code.hpp"

#include <algorithm>
#include <set>

#include "rkcodes/automorphism.hpp"

namespace rkcodes {

namespace {

using WordSet = std::set<RkVector>;

void check_word(const RkVector& w, RingSpec ring, std::size_t n) {
  if (w.size() != n) {
    throw InputError("word " + to_string(w) + " has length " + std::to_string(w.size()) +
                     ", expected " + std::to_string(n));
  }
  for (const RkElement& x : w) {
    if (!(x.ring() == ring)) throw RingMismatch("word " + to_string(w) + " is not over " + to_string(ring));
  }
}

// The submodule current + R*g.
WordSet extend(const WordSet& current, const RkVector& g, const std::vector<RkElement>& scalars) {
  std::set<RkVector> multiples;
  for (const RkElement& lambda : scalars) multiples.insert(scale(lambda, g));
  std::uint64_t work = 0;
  if (!checked_mul(current.size(), multiples.size(), work)) work = ~std::uint64_t{0};
  require_within_cap(work, "span closure");
  WordSet out;
  for (const RkVector& s : current) {
    for (const RkVector& t : multiples) out.insert(add(s, t));
  }
  return out;
}

}  // namespace

LinearCode LinearCode::span(RingSpec ring, std::size_t n, std::vector<RkVector> generators) {
  for (const RkVector& g : generators) check_word(g, ring, n);
  LinearCode code(ring, n);
  WordSet current{zero_vector(ring, n)};
  if (!generators.empty()) {
    const std::vector<RkElement> scalars = elements(ring);
    for (const RkVector& g : generators) {
      if (current.contains(g)) continue;
      current = extend(current, g, scalars);
    }
  }
  code.generators_ = std::move(generators);
  code.codewords_.assign(current.begin(), current.end());
  return code;
}

LinearCode LinearCode::from_codewords(RingSpec ring, std::size_t n, std::vector<RkVector> words) {
  for (const RkVector& w : words) check_word(w, ring, n);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  const RkVector zero = zero_vector(ring, n);
  if (!std::binary_search(words.begin(), words.end(), zero)) {
    throw VerificationError("word set does not contain the zero word");
  }
  LinearCode code(ring, n);
  WordSet current{zero};
  std::vector<RkElement> scalars;
  for (const RkVector& w : words) {
    if (current.contains(w)) continue;
    if (scalars.empty()) scalars = elements(ring);
    current = extend(current, w, scalars);
    code.generators_.push_back(w);
    if (current.size() > words.size()) break;
  }
  if (current.size() != words.size() || !std::equal(current.begin(), current.end(), words.begin())) {
    throw VerificationError("word set is not closed under addition and scalar multiplication");
  }
  code.codewords_ = std::move(words);
  return code;
}

LinearCode LinearCode::zero(RingSpec ring, std::size_t n) { return span(ring, n, {}); }

LinearCode LinearCode::full(RingSpec ring, std::size_t n) {
  std::vector<RkVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    RkVector e = zero_vector(ring, n);
    e[i] = RkElement::one(ring);
    gens.push_back(std::move(e));
  }
  return span(ring, n, std::move(gens));
}

bool LinearCode::contains(const RkVector& w) const {
  return std::binary_search(codewords_.begin(), codewords_.end(), w);
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.ring_ == b.ring_ && a.n_ == b.n_ && a.codewords_ == b.codewords_;
}

// ---------------------------------------------------------------------------

AmbientSpace::AmbientSpace(RingSpec ring, std::size_t n) : n_(n) {
  if (!checked_pow(ring.cardinality(), n, size_)) {
    throw GuardExceeded("ambient space " + to_string(ring) + "^" + std::to_string(n) +
                        " overflows 64 bits");
  }
  require_within_cap(size_, "scanning " + to_string(ring) + "^" + std::to_string(n));
  elements_ = elements(ring);
}

RkElement conjugate(const RkElement& a) {
  return apply_theta(static_cast<unsigned>(a.ring().width() - 1), a);
}

RkElement hermitian_product(const RkVector& a, const RkVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  if (a.empty()) throw InputError("hermitian product of empty vectors has no ring");
  RkElement acc(a.front().ring());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * conjugate(b[i]);
  return acc;
}

namespace {

template <typename Product>
LinearCode dual_by_scan(const LinearCode& code, Product product) {
  if (code.length() == 0) return code;
  std::vector<RkVector> gens;
  for (const RkVector& g : code.generators()) {
    if (!is_zero(g)) gens.push_back(g);
  }
  std::vector<RkVector> kept;
  AmbientSpace(code.ring(), code.length()).for_each([&](const RkVector& w) {
    for (const RkVector& g : gens) {
      if (!product(g, w).is_zero()) return;
    }
    kept.push_back(w);
  });
  return LinearCode::from_codewords(code.ring(), code.length(), std::move(kept));
}

}  // namespace

LinearCode euclidean_dual(const LinearCode& code) {
  return dual_by_scan(code, [](const RkVector& a, const RkVector& b) { return dot(a, b); });
}

LinearCode hermitian_dual(const LinearCode& code) {
  return dual_by_scan(code, [](const RkVector& g, const RkVector& w) { return hermitian_product(g, w); });
}

bool is_self_dual(const LinearCode& code) { return euclidean_dual(code) == code; }

bool is_hermitian_self_dual(const LinearCode& code) { return hermitian_dual(code) == code; }

LinearCode hermitian_selfdual_construct(RingSpec ring, std::size_t n, int index) {
  if (ring.generators() == 0) throw InputError("Hermitian construction needs k >= 1");
  if (index < 1 || index > ring.generators()) throw InputError("generator index out of range");
  const RkElement v = RkElement::monomial(ring, 1u << (index - 1));
  std::vector<RkVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    RkVector g = zero_vector(ring, n);
    g[i] = v;
    gens.push_back(std::move(g));
  }
  return LinearCode::span(ring, n, std::move(gens));
}

// ---------------------------------------------------------------------------

ComponentCodes decompose(const LinearCode& code) {
  const RingSpec ring = code.ring();
  const RingSpec base = ring.base();
  const std::size_t n = code.length();
  const std::size_t width = ring.width();
  std::vector<std::set<RkVector>> rows(width);
  for (const RkVector& c : code.codewords()) {
    const std::vector<std::uint32_t> image = psi_vec(c, PsiLayout::component_major);
    for (std::size_t i = 0; i < width; ++i) {
      RkVector row;
      row.reserve(n);
      for (std::size_t j = 0; j < n; ++j) row.push_back(RkElement::constant(base, image[i * n + j]));
      rows[i].insert(std::move(row));
    }
  }
  std::uint64_t product = 1;
  for (const auto& r : rows) {
    if (!checked_mul(product, r.size(), product)) product = ~std::uint64_t{0};
  }
  if (product != code.size()) {
    throw VerificationError("psi image is not a product of component codes (input not linear)");
  }
  ComponentCodes out;
  out.reserve(width);
  for (auto& r : rows) {
    out.push_back(LinearCode::from_codewords(base, n, std::vector<RkVector>(r.begin(), r.end())));
  }
  return out;
}

LinearCode compose(RingSpec ring, std::span<const LinearCode> components) {
  if (components.size() != ring.width()) {
    throw InputError("expected " + std::to_string(ring.width()) + " component codes, got " +
                     std::to_string(components.size()));
  }
  const std::size_t n = components.front().length();
  for (const LinearCode& c : components) {
    if (c.length() != n) throw InputError("component codes have different lengths");
    if (!(c.ring() == ring.base())) throw RingMismatch("component codes must be over Z_m");
  }
  // psi^{-1}(0, ..., g, ..., 0) for each component generator spans the preimage
  // of the product code.
  std::vector<RkVector> gens;
  std::vector<std::uint32_t> image(n * ring.width());
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (const RkVector& g : components[i].generators()) {
      std::fill(image.begin(), image.end(), 0);
      for (std::size_t j = 0; j < n; ++j) image[i * n + j] = g[j].coeff(0);
      gens.push_back(psi_vec_inv(ring, image, PsiLayout::component_major));
    }
  }
  return LinearCode::span(ring, n, std::move(gens));
}

// ---------------------------------------------------------------------------

std::size_t hamming_weight(const RkVector& w) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](const RkElement& x) { return !x.is_zero(); }));
}

std::uint64_t lee_weight(const RkElement& a) {
  const std::uint32_t m = a.ring().modulus();
  std::uint64_t total = 0;
  for (std::uint32_t y : psi(a)) total += std::min(y, m - y);
  return total;
}

std::uint64_t lee_weight(const RkVector& w) {
  std::uint64_t total = 0;
  for (const RkElement& x : w) total += lee_weight(x);
  return total;
}

std::size_t hamming_distance(const LinearCode& code) {
  if (code.is_zero()) throw NoNonzeroCodeword();
  std::size_t best = code.length();
  for (const RkVector& c : code.codewords()) {
    if (!is_zero(c)) best = std::min(best, hamming_weight(c));
  }
  return best;
}

std::uint64_t lee_distance(const LinearCode& code) {
  if (code.is_zero()) throw NoNonzeroCodeword();
  std::uint64_t best = ~std::uint64_t{0};
  for (const RkVector& c : code.codewords()) {
    if (!is_zero(c)) best = std::min(best, lee_weight(c));
  }
  return best;
}

LinearCode phi_image(const LinearCode& code, const PhiSpec& spec) {
  if (!(code.ring() == spec.source_ring())) {
    throw RingMismatch("phi_" + std::to_string(spec.level()) + " needs a code over " +
                       to_string(spec.source_ring()));
  }
  // R_j = R_{j-1} + v_j R_{j-1}, so phi(g) and phi(v_j g) span the image over R_{j-1}.
  const RkElement vj = RkElement::monomial(code.ring(), 1u << (spec.level() - 1));
  std::vector<RkVector> gens;
  for (const RkVector& g : code.generators()) {
    gens.push_back(phi_vec(spec, g));
    gens.push_back(phi_vec(spec, scale(vj, g)));
  }
  return LinearCode::span(spec.target_ring(), code.length() * spec.length(), std::move(gens));
}

LinearCode phi_chain_image(const LinearCode& code, std::span<const PhiSpec> specs) {
  LinearCode current = code;
  for (const PhiSpec& spec : specs) current = phi_image(current, spec);
  if (current.ring().generators() != 0) {
    throw InputError("phi chain does not reach the base ring; a level is missing");
  }
  return current;
}

}  // namespace rkcodes
