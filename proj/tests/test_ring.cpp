#include "doctest.h"
#include "rkcodes/gray.hpp"
#include "rkcodes/ring.hpp"

using namespace rkcodes;

namespace {

RkElement el(RingSpec r, std::initializer_list<std::int64_t> c) { return RkElement(r, c); }

}  // namespace

TEST_CASE("ring spec basics") {
  const RingSpec z4v(4, 1);
  CHECK(z4v.width() == 2);
  CHECK(z4v.cardinality() == 16);
  CHECK(RingSpec(2, 2).cardinality() == 16);
  CHECK(RingSpec(3, 3).cardinality() == 6561);
  CHECK(z4v.base() == RingSpec(4, 0));
  CHECK(z4v.lower() == RingSpec(4, 0));
  CHECK(z4v.raised() == RingSpec(4, 2));
  CHECK(to_string(z4v) == "Z4[v]");
  CHECK(to_string(RingSpec(2, 2)) == "Z2[v1,v2]");
  CHECK_THROWS_AS(RingSpec(1, 1), InputError);
  CHECK_THROWS_AS(RingSpec(4, kMaxGenerators + 1), InputError);
  CHECK_THROWS_AS(RingSpec(4, 0).lower(), InputError);
  CHECK_THROWS_AS(RingSpec(65535, 4).cardinality(), GuardExceeded);
}

TEST_CASE("multiplication matches the reference values") {
  const RingSpec z4v(4, 1);
  CHECK(el(z4v, {1, 1}) * el(z4v, {2, 3}) == el(z4v, {2, 0}));
  CHECK(el(z4v, {3, 2}) * el(z4v, {1, 3}) == el(z4v, {3, 1}));
  const RingSpec z2(2, 2);
  CHECK(el(z2, {1, 1, 0, 0}) * el(z2, {0, 0, 1, 1}) == el(z2, {0, 0, 1, 1}));
  const RingSpec z3(3, 2);
  CHECK(el(z3, {1, 2, 1, 0}) * el(z3, {2, 0, 0, 1}) == el(z3, {2, 1, 2, 1}));
  const RingSpec z4k3(4, 3);
  CHECK(el(z4k3, {1, 1, 0, 0, 1, 0, 0, 0}) * el(z4k3, {0, 0, 3, 0, 0, 2, 0, 0}) ==
        el(z4k3, {0, 0, 3, 3, 0, 2, 3, 0}));
}

TEST_CASE("generators are idempotent and the ring axioms hold exhaustively") {
  for (RingSpec ring : {RingSpec(4, 1), RingSpec(2, 2), RingSpec(3, 1)}) {
    for (int i = 0; i < ring.generators(); ++i) {
      const RkElement v = RkElement::monomial(ring, 1u << i);
      CHECK(v * v == v);
    }
    const std::vector<RkElement> all = elements(ring);
    const RkElement one = RkElement::one(ring);
    for (const RkElement& a : all) {
      CHECK(a * one == a);
      CHECK(a + (-a) == RkElement::zero(ring));
      for (const RkElement& b : all) {
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(psi(a * b) == [&] {
          PsiImage pa = psi(a);
          const PsiImage pb = psi(b);
          for (std::size_t t = 0; t < pa.size(); ++t) pa[t] = pa[t] * pb[t] % ring.modulus();
          return pa;
        }());
      }
    }
  }
}

TEST_CASE("associativity and distributivity on Z3[v]") {
  const RingSpec ring(3, 1);
  const std::vector<RkElement> all = elements(ring);
  for (const RkElement& a : all) {
    for (const RkElement& b : all) {
      for (const RkElement& c : all) {
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("negative and large coefficients are reduced") {
  const RingSpec z4v(4, 1);
  CHECK(el(z4v, {-1, 5}) == el(z4v, {3, 1}));
  CHECK(RkElement::constant(z4v, -2) == el(z4v, {2, 0}));
  CHECK(7 * el(z4v, {1, 1}) == el(z4v, {3, 3}));
  CHECK_THROWS_AS(el(z4v, {1, 2, 3}), InputError);
}

TEST_CASE("mixing rings is rejected") {
  const RkElement a = RkElement::one(RingSpec(4, 1));
  const RkElement b = RkElement::one(RingSpec(2, 1));
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(a * b, RingMismatch);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(dot(RkVector{a}, RkVector{b}), RingMismatch);
}

TEST_CASE("units") {
  CHECK(units(RingSpec(4, 1)).size() == 4);
  CHECK(units(RingSpec(2, 2)).size() == 1);
  CHECK(units(RingSpec(3, 1)).size() == 4);
  for (RingSpec ring : {RingSpec(4, 1), RingSpec(2, 2), RingSpec(6, 1), RingSpec(9, 1)}) {
    for (const RkElement& a : elements(ring)) {
      CHECK(is_unit(a) == has_inverse_by_search(a));
      if (is_unit(a)) {
        CHECK(a * inverse(a) == RkElement::one(ring));
      } else {
        CHECK_THROWS(inverse(a));
      }
    }
  }
  CHECK(count_residue_units(12) == 4);
  CHECK(residue_inverse(3, 4) == 3);
  CHECK_FALSE(residue_is_unit(2, 4));
}

TEST_CASE("element index is lexicographic on coefficient lists") {
  const RingSpec ring(4, 1);
  const std::vector<RkElement> all = elements(ring);
  REQUIRE(all.size() == 16);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].index() == i);
    CHECK(RkElement::from_index(ring, i) == all[i]);
    if (i > 0) CHECK(all[i - 1] < all[i]);
  }
  CHECK(all[1] == el(ring, {0, 1}));
  CHECK(all[4] == el(ring, {1, 0}));
}

TEST_CASE("string forms") {
  CHECK(to_string(el(RingSpec(4, 1), {1, 3})) == "1+3v");
  CHECK(to_string(RkElement::zero(RingSpec(4, 1))) == "0");
  CHECK(to_string(el(RingSpec(2, 2), {0, 0, 0, 1})) == "v1v2");
  CHECK(to_string(el(RingSpec(4, 2), {2, 1, 0, 3})) == "2+v1+3v1v2");
  const RingSpec z4v(4, 1);
  CHECK(to_string(RkVector{el(z4v, {0, 1}), el(z4v, {1, 3})}) == "(v, 1+3v)");
}

TEST_CASE("enumeration guard") {
  const std::uint64_t saved = enumeration_cap();
  set_enumeration_cap(100);
  CHECK_THROWS_AS(elements(RingSpec(4, 2)), GuardExceeded);
  CHECK(elements(RingSpec(4, 1)).size() == 16);
  set_enumeration_cap(saved);
}

TEST_CASE("vector helpers") {
  const RingSpec z4v(4, 1);
  const RkVector a{el(z4v, {0, 1}), el(z4v, {1, 3})};
  CHECK(dot(a, a) == RkElement::one(z4v));
  CHECK(is_zero(zero_vector(z4v, 3)));
  CHECK(add(a, scale(RkElement::constant(z4v, 3), a)) == zero_vector(z4v, 2));
  CHECK(common_ring(a) == z4v);
}
