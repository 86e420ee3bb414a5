#include "rkcodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "rkcodes/cyclic.hpp"
#include "rkcodes/io.hpp"
#include "rkcodes/weights.hpp"

#ifndef RKCODES_DATA_DIR
#define RKCODES_DATA_DIR "data"
#endif

namespace rkcodes {

namespace {

using io::Json;

struct GlobalOptions {
  std::uint64_t guard = kDefaultEnumerationCap;
  bool json = false;
  std::string layout = "component-major";
  std::string data_dir = RKCODES_DATA_DIR;
};

class Report {
 public:
  void line(std::string s) { lines_.push_back(std::move(s)); }
  Json& data() { return data_; }
  void emit(std::ostream& out, bool json) const {
    if (json) {
      out << data_.dump(2) << '\n';
    } else {
      for (const std::string& s : lines_) out << s << '\n';
    }
  }

 private:
  std::vector<std::string> lines_;
  Json data_ = Json::object();
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

LinearCode load_code(const std::string& path) { return io::code_from_json(io::read_json_file(path)); }

Json load_inline_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return io::parse_json(arg, "<inline>");
  return io::read_json_file(arg);
}

PsiLayout parse_layout(const std::string& s) {
  if (s == "interleaved") return PsiLayout::interleaved;
  if (s == "component-major") return PsiLayout::component_major;
  throw InputError("unknown layout " + s);
}

std::string join_words(const std::vector<RkVector>& words) {
  std::string s;
  for (const RkVector& w : words) s += (s.empty() ? "" : ", ") + to_string(w);
  return "<" + s + ">";
}

std::string list_string(const std::vector<RkElement>& xs) {
  std::string s;
  for (const RkElement& x : xs) s += (s.empty() ? "" : ", ") + to_string(x);
  return "[" + s + "]";
}

std::string numbers(std::span<const std::uint32_t> xs) {
  std::string s;
  for (std::uint32_t x : xs) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return "(" + s + ")";
}

void add_witness(Report& r, const Verdict& v, const std::string& key) {
  if (v.witness) {
    r.line("  witness: " + to_string(*v.witness));
    r.data()[key + "_witness"] = io::word_to_json(*v.witness);
  }
}

// ---------------------------------------------------------------------------

int cmd_analyze(Report& r, const std::string& path) {
  const LinearCode code = load_code(path);
  r.line("ring: " + to_string(code.ring()));
  r.line("length: " + std::to_string(code.length()));
  r.line("size: " + std::to_string(code.size()));
  r.line("generators: " + join_words(code.generators()));
  r.data()["code"] = io::code_to_json(code);
  r.data()["size"] = code.size();
  try {
    const std::size_t dh = hamming_distance(code);
    const std::uint64_t dl = lee_distance(code);
    r.line("d_H: " + std::to_string(dh));
    r.line("d_L: " + std::to_string(dl));
    r.data()["hamming_distance"] = dh;
    r.data()["lee_distance"] = dl;
  } catch (const NoNonzeroCodeword& e) {
    r.line(std::string("d_H: error: ") + e.what());
    r.line(std::string("d_L: error: ") + e.what());
    r.data()["hamming_distance"] = nullptr;
    r.data()["lee_distance"] = nullptr;
    r.data()["distance_error"] = e.what();
  }
  const ComponentCodes parts = decompose(code);
  r.line("components:");
  Json comps = Json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    r.line("  C_" + std::to_string(i + 1) + ": size " + std::to_string(parts[i].size()) + ", " +
           join_words(parts[i].generators()));
    comps.push_back(io::code_to_json(parts[i]));
  }
  r.data()["components"] = comps;
  const bool euclid = is_self_dual(code);
  const bool herm = is_hermitian_self_dual(code);
  r.line(std::string("Euclidean self-dual: ") + yes_no(euclid));
  r.line(std::string("Hermitian self-dual: ") + yes_no(herm));
  r.data()["euclidean_self_dual"] = euclid;
  r.data()["hermitian_self_dual"] = herm;
  return kExitOk;
}

int cmd_dual(Report& r, const std::string& path, bool hermitian, const std::string& output) {
  const LinearCode code = load_code(path);
  const LinearCode dual = hermitian ? hermitian_dual(code) : euclidean_dual(code);
  const char* kind = hermitian ? "Hermitian" : "Euclidean";
  r.line(std::string(kind) + " dual of size " + std::to_string(dual.size()));
  r.line("generators: " + join_words(dual.generators()));
  r.data()["kind"] = kind;
  r.data()["size"] = dual.size();
  r.data()["dual"] = io::code_to_json(dual);
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw InputError("cannot write " + output);
    f << io::code_to_json(dual).dump(2) << '\n';
    r.line("written to " + output);
  }
  return kExitOk;
}

int cmd_macwilliams(Report& r, const std::string& path, const std::string& form, const std::string& group) {
  const LinearCode code = load_code(path);
  r.data()["form"] = form;
  if (form == "hamming") {
    const HammingWE own = hamming_we(code);
    const HammingWE direct = hamming_we(euclidean_dual(code));
    const HammingWE transformed = macwilliams_hamming(own, code.size(), code.ring().cardinality());
    const bool ok = direct == transformed;
    r.line("W_C = " + to_string(own));
    r.line("W_dual (exhaustive) = " + to_string(direct));
    r.line("W_dual (MacWilliams) = " + to_string(transformed));
    r.line(std::string("verdict: ") + yes_no(ok));
    r.data()["code"] = own.counts;
    r.data()["dual_exhaustive"] = direct.counts;
    r.data()["dual_macwilliams"] = transformed.counts;
    r.data()["verdict"] = ok;
    return ok ? kExitOk : kExitMismatch;
  }
  if (form == "cwe") {
    const IdentityCheck c = check_cwe_macwilliams(code);
    const bool ok = c.euclidean && c.hermitian;
    const CompleteWE own = cwe(code);
    const CompleteWE dual = cwe(euclidean_dual(code));
    const CompleteWE hdual = cwe(hermitian_dual(code));
    r.line("cwe terms: code " + std::to_string(own.counts.size()) + ", Euclidean dual " +
           std::to_string(dual.counts.size()) + ", Hermitian dual " + std::to_string(hdual.counts.size()));
    r.line(std::string("panel: ") + std::to_string(c.panel_points) + " point(s), " +
           (c.separating ? "separating" : "pseudo-random"));
    r.line(std::string("Euclidean identity (T): ") + yes_no(c.euclidean));
    r.line(std::string("Hermitian identity (T_H): ") + yes_no(c.hermitian));
    r.line(std::string("verdict: ") + yes_no(ok));
    r.data()["code"] = io::counts_to_json(own.counts);
    r.data()["euclidean_dual"] = io::counts_to_json(dual.counts);
    r.data()["hermitian_dual"] = io::counts_to_json(hdual.counts);
    r.data()["euclidean"] = c.euclidean;
    r.data()["hermitian"] = c.hermitian;
    r.data()["separating"] = c.separating;
    r.data()["verdict"] = ok;
    return ok ? kExitOk : kExitMismatch;
  }
  if (form == "swe") {
    UnitGroup g = group == "trivial" ? UnitGroup::trivial(code.ring()) : UnitGroup::full(code.ring());
    const SMatrix s = s_matrix(g);
    const SymmetrizedWE own = swe(code, g);
    const SymmetrizedWE dual = swe(euclidean_dual(code), g);
    const bool ok = verify_swe_macwilliams(code, g);
    std::string reps;
    for (std::uint64_t x : s.classes.representatives) {
      reps += (reps.empty() ? "" : ", ") + to_string(RkElement::from_index(code.ring(), x));
    }
    r.line("unit group: " + group + " (" + std::to_string(g.members().size()) + " elements)");
    r.line("classes: " + std::to_string(s.classes.representatives.size()) + " [" + reps + "]");
    r.line("S-matrix rows constant on classes: true");
    r.line(std::string("verdict: ") + yes_no(ok));
    Json matrix = Json::array();
    for (const auto& row : s.entries) {
      Json jr = Json::array();
      for (const CyclotomicInt& z : row) jr.push_back(io::cyclotomic_to_json(z));
      matrix.push_back(jr);
    }
    r.data()["group"] = group;
    r.data()["s_matrix"] = matrix;
    r.data()["code"] = io::counts_to_json(own.counts);
    r.data()["dual"] = io::counts_to_json(dual.counts);
    r.data()["verdict"] = ok;
    return ok ? kExitOk : kExitMismatch;
  }
  throw InputError("unknown enumerator form " + form);
}

std::vector<PhiSpec> load_phis(std::uint32_t m, const std::vector<std::string>& paths) {
  std::vector<PhiSpec> specs;
  for (const std::string& p : paths) specs.push_back(io::phi_from_json(m, load_inline_or_file(p)));
  return specs;
}

int cmd_cyclic_check(Report& r, const std::string& path, std::size_t d, const std::vector<std::string>& phis) {
  const LinearCode code = load_code(path);
  const Verdict v = check_quasi_cyclic(code, d);
  r.line("quasi-cyclic of index " + std::to_string(d) + ": " + yes_no(v.holds));
  add_witness(r, v, "quasi_cyclic");
  r.data()["d"] = d;
  r.data()["quasi_cyclic"] = v.holds;
  const ComponentCodes parts = decompose(code);
  bool all = true;
  Json comps = Json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool c = is_quasi_cyclic(parts[i], d);
    all = all && c;
    comps.push_back(c);
    r.line("  C_" + std::to_string(i + 1) + ": " + yes_no(c));
  }
  r.data()["components"] = comps;
  bool consistent = all == v.holds;
  r.line(std::string("components agree: ") + yes_no(consistent));
  if (!phis.empty()) {
    const std::vector<PhiSpec> specs = load_phis(code.ring().modulus(), phis);
    std::size_t index = d;
    for (const PhiSpec& s : specs) index *= s.length();
    const bool img = specs.size() == 1 ? phi_image_quasicyclic_check(code, specs.front(), d)
                         : phi_chain_quasicyclic_check(code, specs, d);
    r.line("phi image quasi-cyclic of index " + std::to_string(index) + ": " + yes_no(img));
    r.data()["phi_image_quasi_cyclic"] = img;
    consistent = consistent && img == v.holds;
  }
  r.data()["consistent"] = consistent;
  return consistent ? kExitOk : kExitMismatch;
}

int cmd_skew_check(Report& r, const std::string& path, const std::string& theta_arg, std::size_t d) {
  const LinearCode code = load_code(path);
  const Automorphism theta = io::automorphism_from_json(code.ring().generators(), load_inline_or_file(theta_arg));
  const SkewShiftSpec spec(code.length(), d, theta);
  const Verdict direct = check_quasi_skew_cyclic(code, spec);
  const Verdict image = psi_image_check(code, spec);
  r.line("theta: " + io::automorphism_to_json(theta).dump());
  r.line("quasi-theta-cyclic of index " + std::to_string(d) + ": " + yes_no(direct.holds));
  add_witness(r, direct, "direct");
  r.line(std::string("psi image check: ") + yes_no(image.holds));
  const bool consistent = direct.holds == image.holds;
  r.line(std::string("checks agree: ") + yes_no(consistent));
  r.data()["theta"] = io::automorphism_to_json(theta);
  r.data()["d"] = d;
  r.data()["quasi_skew_cyclic"] = direct.holds;
  r.data()["psi_image_check"] = image.holds;
  r.data()["consistent"] = consistent;
  return consistent ? kExitOk : kExitMismatch;
}

int cmd_skew_construct(Report& r, const std::string& components_path, const std::string& theta_arg,
                       std::size_t d, const std::string& output) {
  const io::ComponentFile file = io::components_from_json(io::read_json_file(components_path));
  const Automorphism theta = io::automorphism_from_json(file.ring.generators(), load_inline_or_file(theta_arg));
  r.data()["theta"] = io::automorphism_to_json(theta);
  r.data()["d"] = d;
  try {
    const Algorithm1Result res = algorithm1_construct(file.ring, file.length, d, theta, file.components);
    r.line("constructed code over " + to_string(file.ring) + " of length " + std::to_string(file.length) +
           " and size " + std::to_string(res.code.size()));
    r.line("generators: " + join_words(res.code.generators()));
    r.line("certified quasi-theta-cyclic of index " + std::to_string(d) + ": true");
    r.data()["code"] = io::code_to_json(res.code);
    r.data()["size"] = res.code.size();
    r.data()["certified"] = true;
    if (!output.empty()) {
      std::ofstream f(output);
      if (!f) throw InputError("cannot write " + output);
      f << io::code_to_json(res.code).dump(2) << '\n';
      r.line("written to " + output);
    }
    return kExitOk;
  } catch (const PreconditionError& e) {
    r.line("precondition violations:");
    for (const std::string& v : e.violations()) r.line("  " + v);
    r.data()["certified"] = false;
    r.data()["violations"] = e.violations();
    return kExitMismatch;
  }
}

int cmd_gray(Report& r, const std::string& path, PsiLayout layout, const std::vector<std::string>& phis) {
  const LinearCode code = load_code(path);
  const std::size_t n = code.length();
  const std::vector<PhiSpec> specs = load_phis(code.ring().modulus(), phis);
  Json out = Json::array();
  for (const RkVector& g : code.generators()) {
    const std::vector<std::uint32_t> image = psi_vec(g, layout);
    Json entry{{"word", io::word_to_json(g)}, {"psi", image}};
    r.line("word " + to_string(g));
    if (layout == PsiLayout::component_major && n > 0) {
      for (std::size_t i = 0; i < code.ring().width(); ++i) {
        r.line("  psi row " + std::to_string(i + 1) + ": " +
               numbers(std::span<const std::uint32_t>(image.data() + i * n, n)));
      }
    } else {
      r.line("  psi: " + numbers(image));
    }
    if (!specs.empty()) {
      RkVector img = g;
      for (const PhiSpec& spec : specs) img = phi_vec(spec, img);
      r.line("  phi: " + to_string(img));
      entry["phi"] = io::word_to_json(img);
    }
    out.push_back(entry);
  }
  r.data()["layout"] = layout == PsiLayout::interleaved ? "interleaved" : "component-major";
  r.data()["words"] = out;
  return kExitOk;
}

int cmd_table1(Report& r, const std::string& fixture) {
  const std::vector<io::Table1Row> rows = io::table1_from_json(io::read_json_file(fixture));
  bool all = true;
  Json out = Json::array();
  r.line("row  l  code        beta          beta'         d_L  size  status");
  for (const io::Table1Row& row : rows) {
    const LinearCode image = phi_image(row.code, row.phi);
    const std::uint64_t dl = lee_distance(image);
    const std::uint64_t size = image.size();
    const bool ok = dl == row.lee_distance && size == row.image_size;
    all = all && ok;
    std::ostringstream s;
    s << std::left << std::setw(5) << row.row << std::setw(3) << row.phi.length() << std::setw(12)
      << join_words(row.code.generators()) << std::setw(14) << list_string(row.phi.beta()) << std::setw(14)
      << list_string(row.phi.beta_prime()) << std::setw(5) << dl << std::setw(6) << size;
    if (ok) {
      s << "ok";
    } else {
      s << "MISMATCH (expected d_L " << row.lee_distance << ", size " << row.image_size << ")";
    }
    r.line(s.str());
    out.push_back(Json{{"row", row.row},
                       {"lee_distance", dl},
                       {"size", size},
                       {"expected_lee_distance", row.lee_distance},
                       {"expected_size", row.image_size},
                       {"ok", ok}});
  }
  r.line(std::string("all rows match: ") + yes_no(all));
  r.data()["rows"] = out;
  r.data()["all_match"] = all;
  return all ? kExitOk : kExitMismatch;
}

int cmd_search_phi(Report& r, const std::string& path, std::size_t l, const std::vector<std::int64_t>& coeffs,
                   std::size_t top) {
  const LinearCode code = load_code(path);
  const RingSpec ring = code.ring();
  if (ring.generators() == 0) throw InputError("search-phi needs a code over R_k with k >= 1");
  if (l < 2) throw InputError("l must be at least 2");
  r.data()["l"] = l;
  if (code.is_zero()) {
    r.line("skipped: zero code has no Lee distance");
    r.data()["skipped"] = true;
    r.data()["results"] = Json::array();
    return kExitOk;
  }
  const RingSpec target = ring.lower();
  std::vector<std::uint32_t> allowed;
  if (coeffs.empty()) {
    for (std::uint32_t x = 0; x < ring.modulus(); ++x) allowed.push_back(x);
  } else {
    for (std::int64_t c : coeffs) {
      const auto m = static_cast<std::int64_t>(ring.modulus());
      allowed.push_back(static_cast<std::uint32_t>(((c % m) + m) % m));
    }
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  }
  std::vector<RkElement> pool;
  for (const RkElement& x : elements(target)) {
    const auto cs = x.coeffs();
    if (std::all_of(cs.begin(), cs.end(),
                    [&](std::uint32_t c) { return std::binary_search(allowed.begin(), allowed.end(), c); })) {
      pool.push_back(x);
    }
  }
  const std::size_t slots = 2 * (l - 1);
  std::uint64_t total = 0;
  if (!checked_pow(pool.size(), slots, total)) total = ~std::uint64_t{0};
  require_within_cap(total, "phi parameter search");

  struct Candidate {
    std::vector<RkElement> beta;
    std::vector<RkElement> beta_prime;
    std::uint64_t lee;
    std::size_t size;
  };
  std::vector<Candidate> found;
  std::vector<std::size_t> digits(slots, 0);
  for (std::uint64_t iter = 0; iter < total; ++iter) {
    std::vector<RkElement> beta;
    std::vector<RkElement> beta_prime;
    for (std::size_t i = 0; i < l - 1; ++i) beta.push_back(pool[digits[i]]);
    for (std::size_t i = 0; i < l - 1; ++i) beta_prime.push_back(pool[digits[l - 1 + i]]);
    if (is_unit(beta_prime.back())) {
      const PhiSpec spec(beta, beta_prime);
      const LinearCode image = phi_image(code, spec);
      found.push_back({std::move(beta), std::move(beta_prime), lee_distance(image), image.size()});
    }
    for (std::size_t pos = slots; pos-- > 0;) {
      if (++digits[pos] < pool.size()) break;
      digits[pos] = 0;
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return a.lee != b.lee ? a.lee > b.lee : a.size > b.size;
  });
  r.line("candidates: " + std::to_string(found.size()));
  Json results = Json::array();
  for (std::size_t i = 0; i < found.size() && i < top; ++i) {
    const Candidate& c = found[i];
    r.line("d_L " + std::to_string(c.lee) + ", size " + std::to_string(c.size) + ", beta " +
           list_string(c.beta) + ", beta' " + list_string(c.beta_prime));
    Json jb = Json::array();
    Json jbp = Json::array();
    for (const RkElement& x : c.beta) jb.push_back(io::element_to_json(x));
    for (const RkElement& x : c.beta_prime) jbp.push_back(io::element_to_json(x));
    results.push_back(Json{{"lee_distance", c.lee}, {"size", c.size}, {"beta", jb}, {"beta_prime", jbp}});
  }
  r.data()["candidates"] = found.size();
  r.data()["results"] = results;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear codes over Z_m[v_1, ..., v_k] with idempotent generators", "rkcodes"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--guard", g.guard, "Maximum number of objects an enumeration may materialize");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--layout", g.layout, "Psi layout")->check(CLI::IsMember({"interleaved", "component-major"}));
  app.add_option("--data", g.data_dir, "Fixture directory");

  std::function<int(Report&)> action;

  std::string code_path;
  std::string output;
  std::string theta_arg;
  std::string components_path;
  std::string fixture;
  std::string form = "hamming";
  std::string group = "full";
  std::size_t d = 1;
  std::size_t l = 2;
  std::size_t top = 10;
  bool hermitian = false;
  std::vector<std::string> phis;
  std::vector<std::int64_t> coeffs;

  auto* analyze = app.add_subcommand("analyze", "Size, distances, components and self-duality of a code");
  analyze->add_option("code", code_path, "Code JSON file")->required();
  analyze->callback([&] { action = [&](Report& r) { return cmd_analyze(r, code_path); }; });

  auto* dual = app.add_subcommand("dual", "Euclidean or Hermitian dual by exhaustive scan");
  dual->add_option("code", code_path, "Code JSON file")->required();
  dual->add_flag("--hermitian", hermitian, "Hermitian instead of Euclidean dual");
  dual->add_option("-o,--output", output, "Write the dual code JSON here");
  dual->callback([&] { action = [&](Report& r) { return cmd_dual(r, code_path, hermitian, output); }; });

  auto* mw = app.add_subcommand("macwilliams", "Check a MacWilliams identity");
  mw->add_option("code", code_path, "Code JSON file")->required();
  mw->add_option("--form", form, "Enumerator")->check(CLI::IsMember({"hamming", "cwe", "swe"}));
  mw->add_option("--group", group, "Unit subgroup for swe")->check(CLI::IsMember({"trivial", "full"}));
  mw->callback([&] { action = [&](Report& r) { return cmd_macwilliams(r, code_path, form, group); }; });

  auto* cc = app.add_subcommand("cyclic-check", "Quasi-cyclic check with component and phi image checks");
  cc->add_option("code", code_path, "Code JSON file")->required();
  cc->add_option("-d", d, "Number of blocks");
  cc->add_option("--phi", phis, "PhiSpec JSON (file or inline), highest level first");
  cc->callback([&] { action = [&](Report& r) { return cmd_cyclic_check(r, code_path, d, phis); }; });

  auto* sc = app.add_subcommand("skew-check", "Quasi-theta-cyclic check, directly and on the psi image");
  sc->add_option("code", code_path, "Code JSON file")->required();
  sc->add_option("--theta", theta_arg, "Automorphism JSON (file or inline)")->required();
  sc->add_option("-d", d, "Shift amount");
  sc->callback([&] { action = [&](Report& r) { return cmd_skew_check(r, code_path, theta_arg, d); }; });

  auto* sk = app.add_subcommand("skew-construct", "Build a quasi-theta-cyclic code from component codes");
  sk->add_option("--components", components_path, "Components JSON file")->required();
  sk->add_option("--theta", theta_arg, "Automorphism JSON (file or inline)")->required();
  sk->add_option("-d", d, "Shift amount");
  sk->add_option("-o,--output", output, "Write the constructed code JSON here");
  sk->callback([&] {
    action = [&](Report& r) { return cmd_skew_construct(r, components_path, theta_arg, d, output); };
  });

  auto* gray = app.add_subcommand("gray", "Psi and phi images of the generators");
  gray->add_option("code", code_path, "Code JSON file")->required();
  gray->add_option("--phi", phis, "PhiSpec JSON (file or inline), highest level first");
  gray->callback([&] {
    action = [&](Report& r) { return cmd_gray(r, code_path, parse_layout(g.layout), phis); };
  });

  auto* t1 = app.add_subcommand("table1", "Recompute the Z4[v] phi_1 table");
  t1->add_option("--fixture", fixture, "Table fixture (default: <data>/table1.json)");
  t1->callback([&] {
    action = [&](Report& r) {
      return cmd_table1(r, fixture.empty() ? (std::filesystem::path(g.data_dir) / "table1.json").string() : fixture);
    };
  });

  auto* sp = app.add_subcommand("search-phi", "Exhaustive search over phi parameters");
  sp->add_option("code", code_path, "Code JSON file")->required();
  sp->add_option("--l", l, "Expansion length l")->required();
  sp->add_option("--coeffs", coeffs, "Allowed coefficient values (default: all of Z_m)")->delimiter(',');
  sp->add_option("--top", top, "Number of results to print");
  sp->callback([&] { action = [&](Report& r) { return cmd_search_phi(r, code_path, l, coeffs, top); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::uint64_t saved_cap = enumeration_cap();
  set_enumeration_cap(g.guard);
  Report report;
  int code = kExitOk;
  try {
    code = action(report);
    report.emit(out, g.json);
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    code = kExitGuard;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    code = kExitInputError;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    code = kExitMismatch;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    code = kExitInputError;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    code = kExitGuard;
  }
  set_enumeration_cap(saved_cap);
  return code;
}

}  // namespace rkcodes
