#include "rkcodes/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "rkcodes/errors.hpp"

namespace rkcodes {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("cyclotomic integer overflow");
  return out;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("cyclotomic integer overflow");
  return out;
}

// Quotient of num by a monic divisor; the remainder must vanish.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

std::vector<std::int64_t> compute_cyclotomic(std::uint32_t m) {
  std::vector<std::int64_t> poly(m + 1, 0);  // x^m - 1
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d == 0) poly = exact_divide(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

// Reduces an arbitrary-length coefficient vector modulo the monic Phi_m.
std::vector<std::int64_t> reduce(std::vector<std::int64_t> p, const std::vector<std::int64_t>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      p[i - deg + j] = add_checked(p[i - deg + j], -mul_checked(c, phi[j]));
    }
    p[i] = 0;
  }
  p.resize(deg, 0);
  return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw InputError("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly = compute_cyclotomic(m);
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

CyclotomicInt::CyclotomicInt(std::uint32_t order)
    : order_(order), coeffs_(cyclotomic_polynomial(order).size() - 1, 0) {}

CyclotomicInt CyclotomicInt::integer(std::uint32_t order, std::int64_t value) {
  CyclotomicInt z(order);
  z.coeffs_[0] = value;
  return z;
}

CyclotomicInt CyclotomicInt::root_power(std::uint32_t order, std::uint64_t exponent) {
  std::vector<std::int64_t> counts(order, 0);
  counts[exponent % order] = 1;
  return from_root_counts(order, counts);
}

CyclotomicInt CyclotomicInt::from_root_counts(std::uint32_t order, std::span<const std::int64_t> counts) {
  if (counts.size() != order) throw InputError("root counts must have one entry per residue");
  CyclotomicInt z(order);
  z.coeffs_ = reduce(std::vector<std::int64_t>(counts.begin(), counts.end()), cyclotomic_polynomial(order));
  return z;
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool CyclotomicInt::is_integer(std::int64_t& out) const {
  if (!std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int64_t c) { return c == 0; })) return false;
  out = coeffs_[0];
  return true;
}

void CyclotomicInt::check_order(const CyclotomicInt& other) const {
  if (order_ != other.order_) throw InputError("mixing cyclotomic integers of different orders");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  check_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = add_checked(coeffs_[i], other.coeffs_[i]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  check_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = add_checked(coeffs_[i], -other.coeffs_[i]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& other) {
  check_order(other);
  const std::size_t d = coeffs_.size();
  std::vector<std::int64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      prod[i + j] = add_checked(prod[i + j], mul_checked(coeffs_[i], other.coeffs_[j]));
    }
  }
  coeffs_ = reduce(std::move(prod), cyclotomic_polynomial(order_));
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(std::int64_t scalar) {
  for (auto& c : coeffs_) c = mul_checked(c, scalar);
  return *this;
}

CyclotomicInt CyclotomicInt::divided_by(std::int64_t divisor) const {
  if (divisor == 0) throw std::domain_error("division of a cyclotomic integer by zero");
  CyclotomicInt out = *this;
  for (auto& c : out.coeffs_) {
    if (c % divisor != 0) throw std::domain_error("inexact division of a cyclotomic integer");
    c /= divisor;
  }
  return out;
}

std::string to_string(const CyclotomicInt& z) {
  std::string s;
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
    const std::int64_t c = z.coeffs()[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += std::to_string(mag);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace rkcodes
