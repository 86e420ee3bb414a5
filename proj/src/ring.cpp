#include "rkcodes/ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <utility>

#include "rkcodes/subset_transform.hpp"

namespace rkcodes {

namespace {

std::atomic<std::uint64_t> g_enumeration_cap{kDefaultEnumerationCap};

std::uint32_t reduce(std::int64_t value, std::uint32_t m) {
  std::int64_t r = value % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::uint64_t enumeration_cap() { return g_enumeration_cap.load(); }

void set_enumeration_cap(std::uint64_t cap) { g_enumeration_cap.store(cap); }

void require_within_cap(std::uint64_t count, std::string_view what) {
  if (count > enumeration_cap()) {
    throw GuardExceeded(std::string(what) + " needs " + std::to_string(count) +
                        " items, above the enumeration cap of " +
                        std::to_string(enumeration_cap()));
  }
}

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

bool checked_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t& out) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (!checked_mul(acc, base, acc)) return false;
  }
  out = acc;
  return true;
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec(std::uint32_t modulus, int generators)
    : modulus_(modulus), generators_(generators) {
  if (modulus < 2) throw InputError("ring modulus must be at least 2");
  if (generators < 0 || generators > kMaxGenerators) {
    throw InputError("number of idempotent generators must be in [0, " +
                     std::to_string(kMaxGenerators) + "]");
  }
}

std::uint64_t RingSpec::cardinality() const {
  std::uint64_t out = 0;
  if (!checked_pow(modulus_, width(), out)) {
    throw GuardExceeded("cardinality of " + rkcodes::to_string(*this) +
                        " overflows 64 bits");
  }
  return out;
}

RingSpec RingSpec::lower() const {
  if (generators_ == 0) throw InputError("Z_m has no lower level");
  return RingSpec(modulus_, generators_ - 1);
}

RingSpec RingSpec::raised() const { return RingSpec(modulus_, generators_ + 1); }

std::string to_string(const RingSpec& ring) {
  std::string s = "Z" + std::to_string(ring.modulus());
  if (ring.generators() == 1) return s + "[v]";
  if (ring.generators() > 1) {
    s += "[";
    for (int i = 1; i <= ring.generators(); ++i) {
      if (i > 1) s += ",";
      s += "v" + std::to_string(i);
    }
    s += "]";
  }
  return s;
}

// ---------------------------------------------------------------------------
// RkElement

RkElement::RkElement(RingSpec ring) : ring_(ring) {}

RkElement::RkElement(RingSpec ring, std::span<const std::int64_t> coeffs) : ring_(ring) {
  if (coeffs.size() != ring.width()) {
    throw InputError("element of " + to_string(ring) + " needs " +
                     std::to_string(ring.width()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = reduce(coeffs[i], ring.modulus());
}

RkElement::RkElement(RingSpec ring, std::initializer_list<std::int64_t> coeffs)
    : RkElement(ring, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

RkElement RkElement::one(RingSpec ring) { return constant(ring, 1); }

RkElement RkElement::constant(RingSpec ring, std::int64_t value) {
  return monomial(ring, 0, value);
}

RkElement RkElement::monomial(RingSpec ring, unsigned mask, std::int64_t value) {
  if (mask >= ring.width()) throw InputError("monomial mask out of range");
  RkElement e(ring);
  e.coeffs_[mask] = reduce(value, ring.modulus());
  return e;
}

RkElement RkElement::from_index(RingSpec ring, std::uint64_t index) {
  RkElement e(ring);
  const std::uint32_t m = ring.modulus();
  for (std::size_t i = ring.width(); i-- > 0;) {
    e.coeffs_[i] = static_cast<std::uint32_t>(index % m);
    index /= m;
  }
  if (index != 0) throw InputError("element index out of range");
  return e;
}

bool RkElement::is_zero() const {
  const auto c = coeffs();
  return std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t RkElement::index() const {
  (void)ring_.cardinality();
  std::uint64_t idx = 0;
  for (std::uint32_t c : coeffs()) idx = idx * ring_.modulus() + c;
  return idx;
}

void RkElement::check_same_ring(const RkElement& other) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch("ring mismatch: " + to_string(ring_) + " vs " + to_string(other.ring_));
  }
}

RkElement& RkElement::operator+=(const RkElement& other) {
  check_same_ring(other);
  const std::uint32_t m = ring_.modulus();
  for (std::size_t i = 0; i < ring_.width(); ++i) {
    coeffs_[i] = static_cast<std::uint32_t>((std::uint64_t{coeffs_[i]} + other.coeffs_[i]) % m);
  }
  return *this;
}

RkElement& RkElement::operator-=(const RkElement& other) {
  check_same_ring(other);
  const std::uint32_t m = ring_.modulus();
  for (std::size_t i = 0; i < ring_.width(); ++i) {
    coeffs_[i] = static_cast<std::uint32_t>((std::uint64_t{coeffs_[i]} + m - other.coeffs_[i]) % m);
  }
  return *this;
}

// v_U * v_W = v_{U | W}, so the product is the subset-union convolution.
RkElement& RkElement::operator*=(const RkElement& other) {
  check_same_ring(other);
  const std::uint32_t m = ring_.modulus();
  const std::size_t w = ring_.width();
  std::array<std::uint64_t, kMaxWidth> acc{};
  for (std::size_t u = 0; u < w; ++u) {
    if (coeffs_[u] == 0) continue;
    for (std::size_t v = 0; v < w; ++v) {
      acc[u | v] = (acc[u | v] + std::uint64_t{coeffs_[u]} * other.coeffs_[v]) % m;
    }
  }
  for (std::size_t i = 0; i < w; ++i) coeffs_[i] = static_cast<std::uint32_t>(acc[i]);
  return *this;
}

RkElement operator-(const RkElement& a) { return RkElement(a.ring()) - a; }

RkElement operator*(std::int64_t scalar, const RkElement& a) {
  return RkElement::constant(a.ring(), scalar) * a;
}

bool operator==(const RkElement& a, const RkElement& b) {
  if (!(a.ring_ == b.ring_)) return false;
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + a.ring_.width(), b.coeffs_.begin());
}

std::strong_ordering operator<=>(const RkElement& a, const RkElement& b) {
  if (auto c = a.ring_.modulus() <=> b.ring_.modulus(); c != 0) return c;
  if (auto c = a.ring_.generators() <=> b.ring_.generators(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(),
                                                a.coeffs_.begin() + a.ring_.width(),
                                                b.coeffs_.begin(),
                                                b.coeffs_.begin() + b.ring_.width());
}

RkElement add(const RkElement& a, const RkElement& b) { return a + b; }
RkElement mul(const RkElement& a, const RkElement& b) { return a * b; }

// ---------------------------------------------------------------------------
// Units

std::uint32_t residue_inverse(std::uint32_t x, std::uint32_t m) {
  std::int64_t old_r = x % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw InputError(std::to_string(x) + " is not invertible mod " + std::to_string(m));
  return reduce(old_s, m);
}

bool residue_is_unit(std::uint32_t x, std::uint32_t m) { return std::gcd(x % m, m) == 1; }

std::uint64_t count_residue_units(std::uint32_t m) {
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < m; ++x) count += residue_is_unit(x, m) ? 1 : 0;
  return count;
}

bool is_unit(const RkElement& a) {
  const RingSpec& ring = a.ring();
  std::array<std::uint32_t, kMaxWidth> coords{};
  std::copy(a.coeffs().begin(), a.coeffs().end(), coords.begin());
  std::span<std::uint32_t> view(coords.data(), ring.width());
  detail::subset_zeta(view, ring.modulus());
  return std::all_of(view.begin(), view.end(),
                     [&](std::uint32_t y) { return residue_is_unit(y, ring.modulus()); });
}

bool has_inverse_by_search(const RkElement& a) {
  const RkElement one = RkElement::one(a.ring());
  for (const RkElement& b : elements(a.ring())) {
    if (a * b == one) return true;
  }
  return false;
}

RkElement inverse(const RkElement& a) {
  if (!is_unit(a)) throw InputError(to_string(a) + " is not a unit");
  const RingSpec& ring = a.ring();
  std::array<std::uint32_t, kMaxWidth> coords{};
  std::copy(a.coeffs().begin(), a.coeffs().end(), coords.begin());
  std::span<std::uint32_t> view(coords.data(), ring.width());
  detail::subset_zeta(view, ring.modulus());
  for (auto& y : view) y = residue_inverse(y, ring.modulus());
  detail::subset_mobius(view, ring.modulus());
  std::vector<std::int64_t> c(view.begin(), view.end());
  return RkElement(ring, c);
}

std::vector<RkElement> elements(RingSpec ring) {
  const std::uint64_t q = ring.cardinality();
  require_within_cap(q, "enumerating " + to_string(ring));
  std::vector<RkElement> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(RkElement::from_index(ring, i));
  return out;
}

std::vector<RkElement> units(RingSpec ring) {
  std::vector<RkElement> out;
  for (const RkElement& a : elements(ring)) {
    if (is_unit(a)) out.push_back(a);
  }
  return out;
}

std::string to_string(const RkElement& a) {
  const RingSpec& ring = a.ring();
  std::string s;
  for (unsigned mask = 0; mask < ring.width(); ++mask) {
    const std::uint32_t c = a.coeff(mask);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (c != 1 || mask == 0) s += std::to_string(c);
    if (ring.generators() == 1 && mask == 1) {
      s += "v";
    } else {
      for (int i = 0; i < ring.generators(); ++i) {
        if (mask & (1u << i)) s += "v" + std::to_string(i + 1);
      }
    }
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Vectors

RkVector zero_vector(RingSpec ring, std::size_t n) { return RkVector(n, RkElement(ring)); }

RkVector add(const RkVector& a, const RkVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  RkVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RkVector scale(const RkElement& lambda, const RkVector& w) {
  RkVector out;
  out.reserve(w.size());
  for (const RkElement& x : w) out.push_back(lambda * x);
  return out;
}

RkElement dot(const RkVector& a, const RkVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  if (a.empty()) throw InputError("dot product of empty vectors has no ring");
  RkElement acc(a.front().ring());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const RkVector& w) {
  return std::all_of(w.begin(), w.end(), [](const RkElement& x) { return x.is_zero(); });
}

std::string to_string(const RkVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += to_string(w[i]);
  }
  return s + ")";
}

RingSpec common_ring(const RkVector& w) {
  if (w.empty()) throw InputError("empty vector has no ring");
  for (const RkElement& x : w) {
    if (!(x.ring() == w.front().ring())) throw RingMismatch("vector entries from different rings");
  }
  return w.front().ring();
}

}  // namespace rkcodes
