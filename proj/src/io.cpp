#include "rkcodes/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rkcodes::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const char* what) {
  const std::int64_t v = integer(j, what);
  if (v < 0) throw InputError(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array, got " + j.dump());
  return j;
}

// Element of R_j whose coefficient list has `length` entries.
int generators_for_length(std::size_t length) {
  for (int k = 0; k <= kMaxGenerators; ++k) {
    if ((std::size_t{1} << k) == length) return k;
  }
  throw InputError("coefficient list length " + std::to_string(length) + " is not a power of two");
}

}  // namespace

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": invalid JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

RingSpec ring_from_json(const Json& j) {
  const std::int64_t m = integer(field(j, "m"), "m");
  const std::int64_t k = j.contains("k") ? integer(j["k"], "k") : 0;
  if (m < 2 || m > 0xffff) throw InputError("m must lie in [2, 65535]");
  return RingSpec(static_cast<std::uint32_t>(m), static_cast<int>(k));
}

RkElement parse_element(RingSpec ring, std::string_view literal) {
  std::string s;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InputError("empty element literal");
  const auto fail = [&](const std::string& why) {
    return InputError("bad element literal \"" + std::string(literal) + "\": " + why);
  };
  std::vector<std::int64_t> coeffs(ring.width(), 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail("expected + or -");
    }
    std::int64_t c = 1;
    bool has_digits = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      c = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        c = (c * 10 + (s[pos++] - '0')) % ring.modulus();
      }
      has_digits = true;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    unsigned mask = 0;
    while (pos < s.size() && s[pos] == 'v') {
      ++pos;
      int index = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) index = index * 10 + (s[pos++] - '0');
      if (index == 0) {
        if (ring.generators() != 1) throw fail("bare v needs an index when k != 1");
        index = 1;
      }
      if (index > ring.generators()) throw fail("v" + std::to_string(index) + " is not a generator");
      mask |= 1u << (index - 1);
    }
    if (!has_digits && mask == 0) throw fail("empty term");
    coeffs[mask] += sign * c;
  }
  return RkElement(ring, coeffs);
}

RkElement element_from_json(RingSpec ring, const Json& j) {
  if (j.is_string()) return parse_element(ring, j.get<std::string>());
  if (j.is_number_integer()) return RkElement::constant(ring, j.get<std::int64_t>());
  if (!j.is_array()) throw InputError("element must be a coefficient list, integer or literal, got " + j.dump());
  if (j.size() != ring.width()) {
    throw RingMismatch("element " + j.dump() + " has " + std::to_string(j.size()) + " coefficients; " +
                       to_string(ring) + " needs " + std::to_string(ring.width()));
  }
  std::vector<std::int64_t> coeffs;
  for (const Json& c : j) coeffs.push_back(integer(c, "coefficient"));
  return RkElement(ring, coeffs);
}

Json element_to_json(const RkElement& a) {
  Json out = Json::array();
  for (std::uint32_t c : a.coeffs()) out.push_back(c);
  return out;
}

RkVector word_from_json(RingSpec ring, const Json& j) {
  RkVector w;
  for (const Json& x : array(j, "word")) w.push_back(element_from_json(ring, x));
  return w;
}

Json word_to_json(const RkVector& w) {
  Json out = Json::array();
  for (const RkElement& x : w) out.push_back(element_to_json(x));
  return out;
}

LinearCode code_from_json(const Json& j) {
  const RingSpec ring = ring_from_json(j);
  const std::size_t n = count(field(j, "n"), "n");
  std::vector<RkVector> gens;
  for (const Json& g : array(field(j, "generators"), "generators")) {
    RkVector w = word_from_json(ring, g);
    if (w.size() != n) {
      throw InputError("generator " + g.dump() + " has length " + std::to_string(w.size()) + ", expected " +
                       std::to_string(n));
    }
    gens.push_back(std::move(w));
  }
  return LinearCode::span(ring, n, std::move(gens));
}

Json code_to_json(const LinearCode& code) {
  Json gens = Json::array();
  for (const RkVector& g : code.generators()) gens.push_back(word_to_json(g));
  return Json{{"m", code.ring().modulus()},
              {"k", code.ring().generators()},
              {"n", code.length()},
              {"generators", gens}};
}

Automorphism automorphism_from_json(int generators, const Json& j) {
  if (!j.is_object()) throw InputError("automorphism must be an object");
  std::vector<int> flip;
  std::vector<int> perm;
  if (j.contains("flip")) {
    for (const Json& x : array(j["flip"], "flip")) flip.push_back(static_cast<int>(integer(x, "flip entry")));
  }
  if (j.contains("perm")) {
    for (const Json& x : array(j["perm"], "perm")) perm.push_back(static_cast<int>(integer(x, "perm entry")));
  }
  return Automorphism::from_one_based(generators, flip, perm);
}

Json automorphism_to_json(const Automorphism& theta) {
  Json flip = Json::array();
  for (int i = 0; i < theta.generators(); ++i) {
    if (theta.flip_mask() >> i & 1u) flip.push_back(i + 1);
  }
  Json perm = Json::array();
  for (int p : theta.perm()) perm.push_back(p + 1);
  return Json{{"flip", flip}, {"perm", perm}};
}

PhiSpec phi_from_json(std::uint32_t m, const Json& j) {
  const Json& beta = array(field(j, "beta"), "beta");
  const Json& beta_prime = array(field(j, "beta_prime"), "beta_prime");
  if (beta.empty()) throw InputError("beta must not be empty");
  int k = -1;
  if (j.contains("level")) {
    const std::int64_t level = integer(j["level"], "level");
    if (level < 1 || level > kMaxGenerators) throw InputError("level out of range");
    k = static_cast<int>(level) - 1;
  } else if (beta.front().is_array()) {
    k = generators_for_length(beta.front().size());
  } else {
    k = 0;
  }
  const RingSpec ring(m, k);
  std::vector<RkElement> b;
  std::vector<RkElement> bp;
  for (const Json& x : beta) b.push_back(element_from_json(ring, x));
  for (const Json& x : beta_prime) bp.push_back(element_from_json(ring, x));
  PhiSpec spec(std::move(b), std::move(bp));
  if (j.contains("l") && count(j["l"], "l") != spec.length()) {
    throw InputError("\"l\" is " + j["l"].dump() + " but beta has " + std::to_string(beta.size()) +
                     " entries (l must be one more)");
  }
  return spec;
}

Json phi_to_json(const PhiSpec& spec) {
  Json beta = Json::array();
  Json beta_prime = Json::array();
  for (const RkElement& x : spec.beta()) beta.push_back(element_to_json(x));
  for (const RkElement& x : spec.beta_prime()) beta_prime.push_back(element_to_json(x));
  return Json{{"l", spec.length()}, {"level", spec.level()}, {"beta", beta}, {"beta_prime", beta_prime}};
}

ComponentFile components_from_json(const Json& j) {
  const RingSpec ring = ring_from_json(j);
  const std::size_t n = count(field(j, "n"), "n");
  const Json& list = array(field(j, "components"), "components");
  if (list.size() != ring.width()) {
    throw InputError(to_string(ring) + " needs " + std::to_string(ring.width()) + " component codes, file has " +
                     std::to_string(list.size()));
  }
  ComponentFile out{ring, n, {}};
  for (const Json& gens : list) {
    std::vector<RkVector> words;
    for (const Json& g : array(gens, "component generators")) {
      RkVector w = word_from_json(ring.base(), g);
      if (w.size() != n) throw InputError("component generator " + g.dump() + " does not have length n");
      words.push_back(std::move(w));
    }
    out.components.push_back(LinearCode::span(ring.base(), n, std::move(words)));
  }
  return out;
}

std::vector<Table1Row> table1_from_json(const Json& j) {
  std::vector<Table1Row> rows;
  for (const Json& r : array(field(j, "rows"), "rows")) {
    LinearCode code = code_from_json(field(r, "code"));
    PhiSpec phi = phi_from_json(code.ring().modulus(), field(r, "phi"));
    const Json& expected = field(r, "expected");
    rows.push_back({static_cast<int>(integer(field(r, "row"), "row")), std::move(code), std::move(phi),
                    count(field(expected, "lee_distance"), "lee_distance"),
                    count(field(expected, "size"), "size")});
  }
  return rows;
}

Json counts_to_json(const std::map<Composition, std::uint64_t>& counts) {
  Json out = Json::object();
  for (const auto& [comp, c] : counts) out[Json(comp).dump()] = c;
  return out;
}

Json cyclotomic_to_json(const CyclotomicInt& z) { return Json(z.coeffs()); }

}  // namespace rkcodes::io
