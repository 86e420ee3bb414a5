#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "corpus.hpp"
#include "rkcodes/cyclic.hpp"
#include "rkcodes/io.hpp"
#include "rkcodes/weights.hpp"

using namespace rkcodes;
using testing::corpus;

namespace {

// Wall-clock budget for the enumerator identities over the whole corpus.
constexpr double kCriterion6BudgetSeconds = 300.0;

// Reference triples (d_L, |phi_1(C)|) for the seven Z4[v] rows, in fixture order.
const std::vector<std::pair<std::uint64_t, std::size_t>> kTable1Expected = {
    {2, 8}, {2, 4}, {4, 4}, {4, 2}, {4, 2}, {6, 2}, {6, 4},
};

struct Outcome {
  bool pass;
  std::string detail;
};

// Collects failures; the first few are kept as the detail text.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + notes_.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

RkElement el(RingSpec r, std::initializer_list<std::int64_t> c) { return RkElement(r, c); }

std::vector<std::vector<std::uint32_t>> rows_of(const RkVector& w) {
  const std::vector<std::uint32_t> flat = psi_vec(w, PsiLayout::component_major);
  const std::size_t n = w.size();
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i * n < flat.size(); ++i) rows.emplace_back(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  return rows;
}

std::vector<io::Table1Row> table1_rows() {
  return io::table1_from_json(io::read_json_file(RKCODES_DATA_DIR "/table1.json"));
}

// Phi specs for Z2[v1,v2] -> Z2[v] -> Z2.
std::vector<PhiSpec> z2_chain() {
  const RingSpec z2v(2, 1);
  const RingSpec z2(2, 0);
  return {PhiSpec({RkElement::one(z2v)}, {RkElement::one(z2v)}),
          PhiSpec({RkElement::zero(z2), RkElement::one(z2)}, {RkElement::one(z2), RkElement::one(z2)})};
}

// Block shift written out from the definition: d blocks, each rotated right by one.
bool closed_under_block_shift(const std::set<RkVector>& words, std::size_t length, std::size_t blocks) {
  const std::size_t b = length / blocks;
  for (const RkVector& w : words) {
    RkVector s = w;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      for (std::size_t i = 0; i < b; ++i) s[blk * b + (i + 1) % b] = w[blk * b + i];
    }
    if (!words.contains(s)) return false;
  }
  return true;
}

RkElement embed(RingSpec target, const RkElement& a) {
  std::vector<std::int64_t> coeffs(target.width(), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) coeffs[i] = a.coeffs()[i];
  return RkElement(target, coeffs);
}

Outcome criterion1() {
  const std::vector<io::Table1Row> rows = table1_rows();
  Tally t;
  t.check(rows.size() == kTable1Expected.size(), "fixture has " + std::to_string(rows.size()) + " rows");
  std::ostringstream got;
  for (std::size_t i = 0; i < rows.size() && i < kTable1Expected.size(); ++i) {
    const LinearCode image = phi_image(rows[i].code, rows[i].phi);
    const std::uint64_t d = lee_distance(image);
    got << (i ? " " : "") << "(" << d << "," << image.size() << ")";
    t.check(d == kTable1Expected[i].first && image.size() == kTable1Expected[i].second,
            "row " + std::to_string(i + 1) + " gives (" + std::to_string(d) + "," + std::to_string(image.size()) +
                ")");
  }
  return t.outcome(got.str());
}

Outcome criterion2() {
  const RingSpec r(4, 1);
  const RkElement v = el(r, {0, 1});
  const RkElement w = el(r, {1, 3});
  using Rows = std::vector<std::vector<std::uint32_t>>;
  Tally t;
  t.check(rows_of({el(r, {1, 0}), v, el(r, {1, 1}), el(r, {3, 0})}) == Rows{{1, 0, 1, 3}, {1, 1, 2, 3}},
          "(1, v, 1+v, 3)");
  t.check(rows_of({v, v, v}) == Rows{{0, 0, 0}, {1, 1, 1}}, "(v, v, v)");
  t.check(rows_of({v, w}) == Rows{{0, 1}, {1, 0}}, "(v, 1-v)");
  t.check(rows_of({w, v}) == Rows{{1, 0}, {0, 1}}, "(1-v, v)");
  return t.outcome("all four psi images match");
}

Outcome criterion3() {
  const RingSpec r(4, 1);
  const RkElement v = el(r, {0, 1});
  const RkElement w = el(r, {1, 3});
  Tally t;
  const LinearCode euc = LinearCode::span(r, 2, {{v, w}, {w, v}});
  const LinearCode euc_dual = euclidean_dual(euc);
  t.check(euc_dual == euc, "<(v,1-v),(1-v,v)> has size " + std::to_string(euc.size()) + " and Euclidean dual of size " +
                               std::to_string(euc_dual.size()) + ", (v,1-v).(v,1-v) = " +
                               to_string(dot(RkVector{v, w}, RkVector{v, w})));
  const LinearCode herm = LinearCode::span(r, 3, {{v, v, v}});
  const LinearCode herm_dual = hermitian_dual(herm);
  t.check(herm_dual == herm, "<(v,v,v)> has size " + std::to_string(herm.size()) + " and Hermitian dual of size " +
                                 std::to_string(herm_dual.size()));
  for (RingSpec ring : {RingSpec(2, 1), RingSpec(4, 1)}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      t.check(is_hermitian_self_dual(hermitian_selfdual_construct(ring, n, 1)),
              "construction over " + to_string(ring) + " n=" + std::to_string(n));
    }
  }
  return t.outcome("both examples self-dual and all constructions pass");
}

Outcome criterion4() {
  Tally t;
  for (const auto& [label, c] : corpus()) {
    const LinearCode dual = euclidean_dual(c);
    std::uint64_t ambient = 1;
    for (std::size_t i = 0; i < c.length(); ++i) ambient *= c.ring().cardinality();
    t.check(c.size() * dual.size() == ambient, label + ": |C||C^perp| != |R|^n");
    t.check(euclidean_dual(dual) == c, label + ": double dual differs");
    const ComponentCodes parts = decompose(c);
    ComponentCodes dual_parts;
    for (const LinearCode& p : parts) dual_parts.push_back(euclidean_dual(p));
    t.check(euclidean_dual(compose(c.ring(), parts)) == compose(c.ring(), dual_parts), label + ": component duals");
  }
  return t.outcome(std::to_string(corpus().size()) + " codes");
}

Outcome criterion5() {
  Tally t;
  for (const auto& [label, c] : corpus()) {
    const HammingWE predicted = macwilliams_hamming(hamming_we(c), c.size(), c.ring().cardinality());
    t.check(predicted == hamming_we(euclidean_dual(c)), label);
  }
  return t.outcome(std::to_string(corpus().size()) + " codes");
}

Outcome criterion6() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::size_t non_separating = 0;
  std::size_t oracle_codes = 0;
  std::set<std::pair<std::uint32_t, int>> rings;
  for (const auto& [label, c] : corpus()) {
    rings.insert({c.ring().modulus(), c.ring().generators()});
    const IdentityCheck cw = check_cwe_macwilliams(c);
    t.check(cw.euclidean, label + ": cwe with T");
    t.check(cw.hermitian, label + ": cwe with T_H");
    non_separating += !cw.separating;
    t.check(verify_swe_macwilliams(c, UnitGroup::trivial(c.ring())), label + ": swe, trivial group");
    t.check(verify_swe_macwilliams(c, UnitGroup::full(c.ring())), label + ": swe, full unit group");

    std::uint64_t ambient = 1;
    for (std::size_t i = 0; i < c.length(); ++i) ambient *= c.ring().cardinality();
    if (ambient > (std::uint64_t{1} << 16)) continue;
    ++oracle_codes;
    const LinearCode dual = euclidean_dual(c);
    const CharacterSum sum(c);
    const CyclotomicInt in_dual = CyclotomicInt::integer(c.ring().modulus(), static_cast<std::int64_t>(c.size()));
    const CyclotomicInt outside = CyclotomicInt::integer(c.ring().modulus(), 0);
    bool ok = true;
    AmbientSpace(c.ring(), c.length()).for_each([&](const RkVector& u) {
      if (ok && sum(u) != (dual.contains(u) ? in_dual : outside)) ok = false;
    });
    t.check(ok, label + ": character sum oracle");
  }
  for (const auto& [m, k] : rings) {
    const RingSpec ring(m, k);
    t.check(rows_equal_on_classes(s_matrix(UnitGroup::full(ring))), "S rows over " + to_string(ring));
    t.check(rows_equal_on_classes(s_matrix(UnitGroup::trivial(ring))), "S rows over " + to_string(ring));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream elapsed;
  elapsed.precision(1);
  elapsed << std::fixed << seconds;
  t.check(seconds <= kCriterion6BudgetSeconds, "took " + elapsed.str() + " s");
  return t.outcome(std::to_string(corpus().size()) + " codes, " + std::to_string(oracle_codes) +
                   " with the character sum oracle, " + std::to_string(non_separating) +
                   " on pseudo-random panels, " + elapsed.str() + " s");
}

Outcome criterion7() {
  Tally t;
  const std::vector<io::Table1Row> rows = table1_rows();
  const std::vector<PhiSpec> chain = z2_chain();
  std::size_t phi_checks = 0;
  for (const auto& [label, c] : corpus()) {
    const ComponentCodes parts = decompose(c);
    for (std::size_t d : testing::divisors(c.length())) {
      bool all = true;
      for (const LinearCode& p : parts) all = all && is_quasi_cyclic(p, d);
      t.check(is_quasi_cyclic(c, d) == all, label + ", d=" + std::to_string(d) + ": components");
    }
    for (std::size_t d : {std::size_t{1}, c.length()}) {
      if (c.ring() == RingSpec(4, 1)) {
        for (const io::Table1Row& row : rows) {
          std::set<RkVector> image;
          for (const RkVector& w : c.codewords()) image.insert(phi_vec(row.phi, w));
          const bool direct = closed_under_block_shift(image, c.length() * row.phi.length(), row.phi.length() * d);
          t.check(phi_image_quasicyclic_check(c, row.phi, d) == direct, label + ": phi row " + std::to_string(row.row));
          t.check(direct == is_quasi_cyclic(c, d), label + ": phi image index vs code index");
          ++phi_checks;
        }
      } else if (c.ring() == RingSpec(2, 2)) {
        std::set<RkVector> image;
        for (const RkVector& w : c.codewords()) image.insert(phi_chain(chain, w));
        const std::size_t l = chain[0].length() * chain[1].length();
        const bool direct = closed_under_block_shift(image, c.length() * l, l * d);
        t.check(phi_chain_quasicyclic_check(c, chain, d) == direct, label + ": phi chain");
        t.check(direct == is_quasi_cyclic(c, d), label + ": phi chain index vs code index");
        ++phi_checks;
      }
    }
  }
  return t.outcome(std::to_string(corpus().size()) + " codes, " + std::to_string(phi_checks) + " phi images");
}

// All component tuples over Z_2 of length n that satisfy the preconditions,
// fed through the construction.
void algorithm1_sweep(RingSpec ring, std::size_t n, Tally& t, std::size_t& certified, std::size_t& nontrivial) {
  const RingSpec base = ring.base();
  std::vector<LinearCode> codes;
  {
    std::set<std::vector<RkVector>> seen;
    std::vector<RkVector> words;
    AmbientSpace(base, n).for_each([&](const RkVector& w) { words.push_back(w); });
    for (const RkVector& a : words) {
      for (const RkVector& b : words) {
        LinearCode c = LinearCode::span(base, n, {a, b});
        if (seen.insert(c.codewords()).second) codes.push_back(std::move(c));
      }
    }
  }
  std::uint64_t ambient = 1;
  for (std::size_t i = 0; i < n; ++i) ambient *= ring.cardinality();
  std::vector<std::size_t> pick(ring.width(), 0);
  for (;;) {
    std::vector<LinearCode> comps;
    for (std::size_t i : pick) comps.push_back(codes[i]);
    for (const auto& [name, theta] : testing::skew_automorphisms(ring.generators())) {
      for (std::size_t d : testing::divisors(n)) {
        if (!algorithm1_violations(ring, n, d, theta, comps).empty()) continue;
        const Algorithm1Result r = algorithm1_construct(ring, n, d, theta, comps);
        const bool ok = r.certificate.holds && is_quasi_skew_cyclic(r.code, SkewShiftSpec(n, d, theta));
        t.check(ok, to_string(ring) + " " + name + " d=" + std::to_string(d) + ": construction not certified");
        certified += ok;
        nontrivial += ok && !theta.is_identity() && r.code.size() > 1 && r.code.size() < ambient;
      }
    }
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == codes.size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
}

Outcome criterion8() {
  Tally t;
  std::size_t skew_checks = 0;
  for (const auto& [label, c] : corpus()) {
    for (const auto& [name, theta] : testing::skew_automorphisms(c.ring().generators())) {
      for (std::size_t d : testing::divisors(c.length())) {
        const SkewShiftSpec spec(c.length(), d, theta);
        t.check(psi_image_check(c, spec).holds == is_quasi_skew_cyclic(c, spec),
                label + " " + name + " d=" + std::to_string(d));
        ++skew_checks;
      }
    }
  }
  std::ostringstream summary;
  summary << skew_checks << " skew checks";
  for (const auto& [ring, n] : {std::pair{RingSpec(2, 1), std::size_t{2}}, std::pair{RingSpec(2, 1), std::size_t{3}},
                                std::pair{RingSpec(2, 2), std::size_t{2}}}) {
    std::size_t certified = 0;
    std::size_t nontrivial = 0;
    algorithm1_sweep(ring, n, t, certified, nontrivial);
    summary << "; " << to_string(ring) << " n=" << n << ": " << certified << " constructions, " << nontrivial
            << " nontrivial with theta != id";
    if (n == 2) t.check(nontrivial > 0, "no nontrivial theta-cyclic construction over " + to_string(ring));
  }
  return t.outcome(summary.str());
}

Outcome criterion9() {
  Tally t;
  for (const auto& [m, k] : {std::pair{2u, 1}, std::pair{2u, 2}, std::pair{3u, 1}, std::pair{4u, 1}}) {
    const RingSpec ring(m, k);
    for (const RkElement& a : elements(ring)) {
      const PsiImage image = psi(a);
      t.check(psi_inv(ring, image) == a, "psi roundtrip on " + to_string(a));
    }
  }
  std::vector<PhiSpec> specs;
  for (const io::Table1Row& row : table1_rows()) specs.push_back(row.phi);
  for (const PhiSpec& s : z2_chain()) specs.push_back(s);
  for (const PhiSpec& spec : specs) {
    const RingSpec src = spec.source_ring();
    const RingSpec dst = spec.target_ring();
    const std::vector<RkElement> all = elements(src);
    std::set<RkVector> images;
    for (const RkElement& a : all) images.insert(phi(spec, a));
    t.check(images.size() == all.size(), "phi not injective on " + to_string(src));
    for (const RkElement& a : all) {
      for (const RkElement& b : all) {
        const RkVector sum = phi(spec, a + b);
        const RkVector pa = phi(spec, a);
        const RkVector pb = phi(spec, b);
        bool additive = true;
        for (std::size_t i = 0; i < sum.size(); ++i) additive = additive && sum[i] == pa[i] + pb[i];
        t.check(additive, "phi not additive");
      }
      for (const RkElement& r : elements(dst)) {
        const RkVector scaled = phi(spec, embed(src, r) * a);
        const RkVector pa = phi(spec, a);
        bool linear = true;
        for (std::size_t i = 0; i < scaled.size(); ++i) linear = linear && scaled[i] == r * pa[i];
        t.check(linear, "phi not linear over " + to_string(dst));
      }
    }
  }
  return t.outcome("4 rings, " + std::to_string(specs.size()) + " phi specs");
}

Outcome criterion10() {
  Tally t;
  std::size_t compared = 0;
  for (const auto& [label, c] : corpus()) {
    if (c.is_zero()) continue;
    std::size_t dh = SIZE_MAX;
    std::uint64_t dl = UINT64_MAX;
    for (const LinearCode& p : decompose(c)) {
      if (p.is_zero()) continue;
      dh = std::min(dh, hamming_distance(p));
      dl = std::min(dl, lee_distance(p));
    }
    t.check(hamming_distance(c) == dh, label + ": Hamming");
    t.check(lee_distance(c) == dl, label + ": Lee");
    ++compared;
  }
  return t.outcome(std::to_string(compared) + " nonzero codes");
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {"Z4 phi_1 table", criterion1},           {"psi examples", criterion2},
    {"self-duality examples", criterion3},    {"duality laws", criterion4},
    {"MacWilliams, Hamming form", criterion5}, {"MacWilliams, cwe and swe forms", criterion6},
    {"cyclic characterizations", criterion7}, {"skew characterizations", criterion8},
    {"gray map laws", criterion9},            {"distance properties", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance criteria");
  int only = 0;
  app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = kCriteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << kCriteria[i].name << ": " << o.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
