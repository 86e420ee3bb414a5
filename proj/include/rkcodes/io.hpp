#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rkcodes/automorphism.hpp"
#include "rkcodes/code.hpp"
#include "rkcodes/gray.hpp"
#include "rkcodes/weights.hpp"

namespace rkcodes::io {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError with line and column.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(std::string_view text, std::string_view origin);

RingSpec ring_from_json(const Json& j);

/// Coefficient list in bitmask order, a bare integer (constant), or a
/// literal such as "1+3v" or "2v1v2 + 1".
RkElement element_from_json(RingSpec ring, const Json& j);
RkElement parse_element(RingSpec ring, std::string_view literal);
Json element_to_json(const RkElement& a);

RkVector word_from_json(RingSpec ring, const Json& j);
Json word_to_json(const RkVector& w);

/// {"m", "k", "n", "generators"}.
LinearCode code_from_json(const Json& j);
Json code_to_json(const LinearCode& code);

/// {"flip": [...], "perm": [...]}, both 1-based and optional.
Automorphism automorphism_from_json(int generators, const Json& j);
Json automorphism_to_json(const Automorphism& theta);

/// {"l", "beta", "beta_prime"}; the level follows from the coefficient-list
/// length unless "level" is given.
PhiSpec phi_from_json(std::uint32_t m, const Json& j);
Json phi_to_json(const PhiSpec& spec);

struct ComponentFile {
  RingSpec ring;
  std::size_t length;
  ComponentCodes components;
};

/// {"m", "k", "n", "components": [[word over Z_m, ...], ...]}.
ComponentFile components_from_json(const Json& j);

struct Table1Row {
  int row;
  LinearCode code;
  PhiSpec phi;
  std::uint64_t lee_distance;
  std::uint64_t image_size;
};

std::vector<Table1Row> table1_from_json(const Json& j);

/// Composition maps keyed by the stringified composition, e.g. "[1,0,2]".
Json counts_to_json(const std::map<Composition, std::uint64_t>& counts);
Json cyclotomic_to_json(const CyclotomicInt& z);

}  // namespace rkcodes::io
