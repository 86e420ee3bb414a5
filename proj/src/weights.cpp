#include "rkcodes/weights.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "rkcodes/gray.hpp"

namespace rkcodes {

CyclotomicInt chi(std::uint32_t m, std::uint64_t x) { return CyclotomicInt::root_power(m, x % m); }

std::uint32_t chi_exponent(const RkElement& a) {
  const std::uint32_t m = a.ring().modulus();
  std::uint64_t e = 0;
  for (std::uint32_t y : psi(a)) e += y;
  return static_cast<std::uint32_t>(e % m);
}

CyclotomicInt chi_rk(const RkElement& a) { return chi(a.ring().modulus(), chi_exponent(a)); }

CharacterSum::CharacterSum(const LinearCode& code)
    : m_(code.ring().modulus()), n_(code.length() * code.ring().width()), words_(code.size()) {
  images_.reserve(n_ * words_);
  for (const RkVector& c : code.codewords()) {
    const std::vector<std::uint32_t> img = psi_vec(c, PsiLayout::interleaved);
    images_.insert(images_.end(), img.begin(), img.end());
  }
}

CyclotomicInt CharacterSum::operator()(const RkVector& u) const {
  const std::vector<std::uint32_t> pu = u.empty() ? std::vector<std::uint32_t>{} : psi_vec(u, PsiLayout::interleaved);
  if (pu.size() != n_) throw InputError("word length does not match the code");
  std::vector<std::int64_t> hist(m_, 0);
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint32_t* c = images_.data() + w * n_;
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < n_; ++i) e += std::uint64_t{pu[i]} * c[i];
    ++hist[e % m_];
  }
  return CyclotomicInt::from_root_counts(m_, hist);
}

CyclotomicInt character_sum_check(const LinearCode& code, const RkVector& u) {
  const std::uint32_t m = code.ring().modulus();
  std::vector<std::int64_t> hist(m, 0);
  if (code.length() == 0) {
    hist[0] = static_cast<std::int64_t>(code.size());
  } else {
    for (const RkVector& c : code.codewords()) ++hist[chi_exponent(dot(u, c))];
  }
  return CyclotomicInt::from_root_counts(m, hist);
}

// ---------------------------------------------------------------------------

HammingWE hamming_we(const LinearCode& code) {
  HammingWE we{std::vector<std::int64_t>(code.length() + 1, 0)};
  for (const RkVector& c : code.codewords()) ++we.counts[hamming_weight(c)];
  return we;
}

HammingWE macwilliams_hamming(const HammingWE& we, std::uint64_t code_size, std::uint64_t q) {
  if (we.counts.empty()) throw InputError("empty weight enumerator");
  if (code_size == 0) throw InputError("code size must be positive");
  const std::size_t n = we.counts.size() - 1;
  const auto sq = static_cast<__int128>(q);
  std::vector<__int128> acc(n + 1, 0);
  for (std::size_t w = 0; w <= n; ++w) {
    if (we.counts[w] == 0) continue;
    // (1 + (q-1)Y)^{n-w} (1 - Y)^w as a polynomial in Y.
    std::vector<__int128> poly{1};
    auto times = [&](__int128 c0, __int128 c1) {
      std::vector<__int128> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * c0;
        next[i + 1] += poly[i] * c1;
      }
      poly = std::move(next);
    };
    for (std::size_t i = 0; i < n - w; ++i) times(1, sq - 1);
    for (std::size_t i = 0; i < w; ++i) times(1, -1);
    for (std::size_t j = 0; j <= n; ++j) acc[j] += poly[j] * we.counts[w];
  }
  HammingWE out{std::vector<std::int64_t>(n + 1, 0)};
  const auto size = static_cast<__int128>(code_size);
  for (std::size_t j = 0; j <= n; ++j) {
    if (acc[j] % size != 0) {
      throw VerificationError("MacWilliams transform has a non-integer coefficient at weight " +
                              std::to_string(j));
    }
    const __int128 value = acc[j] / size;
    if (value > INT64_MAX || value < INT64_MIN) throw std::overflow_error("weight enumerator overflow");
    out.counts[j] = static_cast<std::int64_t>(value);
  }
  return out;
}

std::string to_string(const HammingWE& we) {
  const std::size_t n = we.counts.size() - 1;
  std::string s;
  for (std::size_t w = 0; w <= n; ++w) {
    const std::int64_t c = we.counts[w];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    std::string mono;
    if (n - w >= 1) mono += "X" + (n - w > 1 ? "^" + std::to_string(n - w) : std::string());
    if (w >= 1) mono += "Y" + (w > 1 ? "^" + std::to_string(w) : std::string());
    if (c != 1 || mono.empty()) s += std::to_string(c);
    s += mono;
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

CompleteWE cwe(const LinearCode& code) {
  const RingSpec ring = code.ring();
  const std::uint64_t q = ring.cardinality();
  require_within_cap(q, "complete weight enumerator variables");
  CompleteWE out{ring, code.length(), {}};
  for (const RkVector& c : code.codewords()) {
    Composition comp(q, 0);
    for (const RkElement& x : c) ++comp[x.index()];
    ++out.counts[comp];
  }
  return out;
}

CharacterTable::CharacterTable(RingSpec ring, bool hermitian)
    : ring_(ring), hermitian_(hermitian), size_(0) {
  const std::uint64_t q = ring.cardinality();
  if (q > kCharacterTableLimit) {
    throw GuardExceeded("character table of " + to_string(ring) + " has " + std::to_string(q) +
                        " rows, above the limit of " + std::to_string(kCharacterTableLimit));
  }
  size_ = q;
  const std::vector<RkElement> all = elements(ring);
  exponents_.resize(size_ * size_);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      const RkElement col = hermitian ? conjugate(all[b]) : all[b];
      exponents_[a * size_ + b] = chi_exponent(all[a] * col);
    }
  }
}

CyclotomicInt CharacterTable::entry(std::size_t row, std::size_t col) const {
  return CyclotomicInt::root_power(ring_.modulus(), exponent(row, col));
}

// ---------------------------------------------------------------------------
// Evaluation panel.
//
// An enumerator identity  E'(X) = E(M X) / |C|  in variables X_0..X_{v-1},
// where every entry of M is a sum of roots of unity, is checked by
// substituting X_b <- y^{h(b)} for a few exponent maps h and comparing the
// resulting univariate polynomials in y exactly. Coefficients are carried in
// the group ring Z[Z_m] (a count per power of xi) and reduced to Z[xi] only
// for the comparison; the reduction is a ring map, so nothing is lost.
//
// Both sides are homogeneous of degree n. With h(b) = (n+1)^b distinct
// monomials of degree n receive distinct exponents (base-(n+1) digits), so
// a single point already decides the identity. When (n+1)^v does not fit in
// 64 bits the panel falls back to four fixed pseudo-random injective maps.
namespace {

// One summand xi^root * X_variable of a substituted variable.
struct Term {
  std::size_t variable;
  std::uint32_t root;
};

using Substitution = std::vector<std::vector<Term>>;

// Sparse polynomial: key = y_exponent * m + root, value = integer count.
using Poly = std::vector<std::pair<std::uint64_t, std::int64_t>>;

struct Panel {
  std::vector<std::vector<std::uint64_t>> maps;
  bool separating = false;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Panel make_panel(std::size_t variables, std::size_t degree, std::uint32_t m) {
  Panel panel;
  std::uint64_t span = 0;
  std::uint64_t bound = 0;
  if (checked_pow(degree + 1, variables, span) && checked_mul(span, m, bound)) {
    std::vector<std::uint64_t> h(variables);
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < variables; ++i, p *= (degree + 1)) h[i] = p;
    panel.maps.push_back(std::move(h));
    panel.separating = true;
    return panel;
  }
  constexpr std::uint64_t kRange = std::uint64_t{1} << 24;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    std::vector<std::uint64_t> h;
    std::set<std::uint64_t> used;
    for (std::uint64_t i = 0; h.size() < variables; ++i) {
      const std::uint64_t e = splitmix64(seed * 0x100000001b3ULL + i) % kRange;
      if (used.insert(e).second) h.push_back(e);
    }
    panel.maps.push_back(std::move(h));
  }
  return panel;
}

Poly multiply(const Poly& a, const Poly& b, std::uint32_t m) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const std::uint64_t y = ka / m + kb / m;
      const std::uint64_t r = (ka % m + kb % m) % m;
      std::int64_t c;
      if (__builtin_mul_overflow(ca, cb, &c)) throw std::overflow_error("panel coefficient overflow");
      raw.emplace_back(y * m + r, c);
    }
  }
  std::sort(raw.begin(), raw.end());
  Poly out;
  for (const auto& [k, c] : raw) {
    if (!out.empty() && out.back().first == k) {
      out.back().second += c;
    } else {
      out.emplace_back(k, c);
    }
  }
  std::erase_if(out, [](const auto& kc) { return kc.second == 0; });
  return out;
}

bool identity_holds(const Substitution& subst, const std::map<Composition, std::uint64_t>& dual_side,
                    const std::map<Composition, std::uint64_t>& code_side, std::uint64_t code_size,
                    std::uint32_t m, const Panel& panel) {
  const std::size_t v = subst.size();
  for (const auto& h : panel.maps) {
    std::vector<Poly> base(v);
    for (std::size_t b = 0; b < v; ++b) {
      std::map<std::uint64_t, std::int64_t> acc;
      for (const Term& t : subst[b]) acc[h[t.variable] * m + t.root] += 1;
      base[b].assign(acc.begin(), acc.end());
    }
    std::map<std::pair<std::size_t, std::uint32_t>, Poly> powers;
    auto power = [&](std::size_t b, std::uint32_t e) -> const Poly& {
      auto it = powers.find({b, e});
      if (it != powers.end()) return it->second;
      Poly p = base[b];
      for (std::uint32_t i = 2; i <= e; ++i) {
        auto prev = powers.find({b, i});
        if (prev != powers.end()) {
          p = prev->second;
        } else {
          p = multiply(p, base[b], m);
          powers.emplace(std::make_pair(b, i), p);
        }
      }
      return powers.emplace(std::make_pair(b, e), std::move(p)).first->second;
    };

    std::unordered_map<std::uint64_t, std::int64_t> rhs;
    for (const auto& [comp, count] : code_side) {
      Poly prod{{0, 1}};
      for (std::size_t b = 0; b < v; ++b) {
        if (comp[b] > 0) prod = multiply(prod, power(b, comp[b]), m);
      }
      for (const auto& [k, c] : prod) rhs[k] += c * static_cast<std::int64_t>(count);
    }
    std::map<std::uint64_t, std::vector<std::int64_t>> rhs_by_y;
    for (const auto& [k, c] : rhs) {
      auto& slot = rhs_by_y[k / m];
      if (slot.empty()) slot.assign(m, 0);
      slot[k % m] += c;
    }

    std::map<std::uint64_t, std::int64_t> lhs;
    for (const auto& [comp, count] : dual_side) {
      std::uint64_t y = 0;
      for (std::size_t b = 0; b < v; ++b) y += comp[b] * h[b];
      lhs[y] += static_cast<std::int64_t>(count * code_size);
    }

    for (const auto& [y, counts] : rhs_by_y) {
      const CyclotomicInt value = CyclotomicInt::from_root_counts(m, counts);
      std::int64_t as_int = 0;
      if (!value.is_integer(as_int)) return false;
      const auto it = lhs.find(y);
      if (as_int != (it == lhs.end() ? 0 : it->second)) return false;
    }
    for (const auto& [y, c] : lhs) {
      if (c != 0 && !rhs_by_y.contains(y)) return false;
    }
  }
  return true;
}

Substitution table_substitution(const CharacterTable& table) {
  Substitution subst(table.size());
  for (std::size_t b = 0; b < table.size(); ++b) {
    for (std::size_t a = 0; a < table.size(); ++a) subst[b].push_back({a, table.exponent(b, a)});
  }
  return subst;
}

}  // namespace

bool cwe_identity_holds(const CompleteWE& code, const CompleteWE& dual, std::uint64_t code_size, bool hermitian) {
  if (!(code.ring == dual.ring) || code.length != dual.length) {
    throw InputError("enumerators of different rings or lengths");
  }
  const CharacterTable table(code.ring, hermitian);
  const Panel panel = make_panel(table.size(), code.length, code.ring.modulus());
  return identity_holds(table_substitution(table), dual.counts, code.counts, code_size, code.ring.modulus(), panel);
}

IdentityCheck check_cwe_macwilliams(const LinearCode& code) {
  const RingSpec ring = code.ring();
  const CharacterTable t(ring, false);
  const Panel panel = make_panel(t.size(), code.length(), ring.modulus());
  const CompleteWE own = cwe(code);
  IdentityCheck out;
  out.separating = panel.separating;
  out.panel_points = panel.maps.size();
  out.euclidean = cwe_identity_holds(own, cwe(euclidean_dual(code)), code.size(), false);
  out.hermitian = cwe_identity_holds(own, cwe(hermitian_dual(code)), code.size(), true);
  return out;
}

bool verify_cwe_macwilliams(const LinearCode& code) {
  const IdentityCheck r = check_cwe_macwilliams(code);
  return r.euclidean && r.hermitian;
}

// ---------------------------------------------------------------------------

UnitGroup::UnitGroup(RingSpec ring, std::vector<RkElement> members) : ring_(ring) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::set<RkElement> set(members.begin(), members.end());
  if (!set.contains(RkElement::one(ring))) throw InputError("unit subgroup must contain 1");
  for (const RkElement& u : members) {
    if (!(u.ring() == ring)) throw RingMismatch("unit subgroup element from another ring");
    if (!is_unit(u)) throw InputError(to_string(u) + " is not a unit");
    if (!set.contains(inverse(u))) throw InputError("unit subgroup is not closed under inverses");
    for (const RkElement& w : members) {
      if (!set.contains(u * w)) throw InputError("unit subgroup is not closed under multiplication");
    }
  }
  members_ = std::move(members);
}

UnitGroup UnitGroup::trivial(RingSpec ring) { return UnitGroup(ring, {RkElement::one(ring)}); }

UnitGroup UnitGroup::full(RingSpec ring) { return UnitGroup(ring, units(ring)); }

ElementClasses classify(const UnitGroup& group) {
  const RingSpec ring = group.ring();
  const std::uint64_t q = ring.cardinality();
  require_within_cap(q, "classifying elements");
  constexpr std::size_t kUnassigned = ~std::size_t{0};
  ElementClasses out;
  out.class_of.assign(q, kUnassigned);
  for (std::uint64_t x = 0; x < q; ++x) {
    if (out.class_of[x] != kUnassigned) continue;
    const std::size_t id = out.representatives.size();
    out.representatives.push_back(x);
    const RkElement a = RkElement::from_index(ring, x);
    for (const RkElement& u : group.members()) out.class_of[(u * a).index()] = id;
  }
  return out;
}

SymmetrizedWE swe(const LinearCode& code, const UnitGroup& group) {
  if (!(code.ring() == group.ring())) throw RingMismatch("code and unit group over different rings");
  SymmetrizedWE out{classify(group), {}};
  const std::size_t t = out.classes.representatives.size();
  for (const RkVector& c : code.codewords()) {
    Composition comp(t, 0);
    for (const RkElement& x : c) ++comp[out.classes.class_of[x.index()]];
    ++out.counts[comp];
  }
  return out;
}

SMatrix s_matrix(const UnitGroup& group) {
  const RingSpec ring = group.ring();
  const CharacterTable table(ring, false);
  SMatrix s{classify(group), {}, {}};
  const std::size_t t = s.classes.representatives.size();
  const std::uint32_t m = ring.modulus();
  for (std::size_t a = 0; a < table.size(); ++a) {
    std::vector<std::vector<std::int64_t>> counts(t, std::vector<std::int64_t>(m, 0));
    for (std::size_t g = 0; g < table.size(); ++g) ++counts[s.classes.class_of[g]][table.exponent(a, g)];
    std::vector<CyclotomicInt> row;
    row.reserve(t);
    for (const auto& c : counts) row.push_back(CyclotomicInt::from_root_counts(m, c));
    s.full_rows.push_back(std::move(row));
  }
  if (!rows_equal_on_classes(s)) {
    throw VerificationError("S matrix rows differ on equivalent elements");
  }
  for (std::uint64_t rep : s.classes.representatives) s.entries.push_back(s.full_rows[rep]);
  return s;
}

bool rows_equal_on_classes(const SMatrix& s) {
  for (std::size_t a = 0; a < s.full_rows.size(); ++a) {
    const std::uint64_t rep = s.classes.representatives[s.classes.class_of[a]];
    if (s.full_rows[a] != s.full_rows[rep]) return false;
  }
  return true;
}

bool verify_swe_macwilliams(const LinearCode& code, const UnitGroup& group) {
  const RingSpec ring = code.ring();
  if (!(ring == group.ring())) throw RingMismatch("code and unit group over different rings");
  const CharacterTable table(ring, false);
  const ElementClasses classes = classify(group);
  const std::size_t t = classes.representatives.size();
  Substitution subst(t);
  for (std::size_t alpha = 0; alpha < t; ++alpha) {
    const std::uint64_t rep = classes.representatives[alpha];
    for (std::size_t g = 0; g < table.size(); ++g) {
      subst[alpha].push_back({classes.class_of[g], table.exponent(rep, g)});
    }
  }
  const Panel panel = make_panel(t, code.length(), ring.modulus());
  return identity_holds(subst, swe(euclidean_dual(code), group).counts, swe(code, group).counts,
                        code.size(), ring.modulus(), panel);
}

}  // namespace rkcodes
