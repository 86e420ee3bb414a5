#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "rkcodes/cli.hpp"
#include "rkcodes/io.hpp"

using namespace rkcodes;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rkcodes");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(RKCODES_DATA_DIR) + "/samples/" + name; }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze") {
  const Run r = run({"analyze", sample("psi_example.json")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "size: 16"));
  CHECK(has(r.out, "d_L: 3"));
  CHECK(has(r.out, "C_1: size 4, <(1, 0, 1, 3)>"));
  CHECK(has(r.out, "C_2: size 4, <(1, 1, 2, 3)>"));
  const Run zero = run({"analyze", sample("zero_code.json")});
  CHECK(zero.code == kExitOk);
  CHECK(has(zero.out, "d_H: error: no nonzero codeword"));
}

TEST_CASE("analyze as JSON") {
  const Run r = run({"--json", "analyze", sample("v_code.json")});
  REQUIRE(r.code == kExitOk);
  const io::Json j = io::Json::parse(r.out);
  CHECK(j["size"] == 4);
  CHECK(j["hermitian_self_dual"] == true);
  CHECK(j["components"].size() == 2);
}

TEST_CASE("dual writes a code file") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "rkcodes_cli_dual.json";
  const Run r = run({"dual", sample("psi_example.json"), "-o", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(io::code_from_json(io::read_json_file(path.string())).size() == 4096);
  std::filesystem::remove(path);
  const Run h = run({"dual", "--hermitian", sample("v_code.json")});
  CHECK(has(h.out, "Hermitian dual of size 4"));
}

TEST_CASE("macwilliams forms") {
  const Run ham = run({"macwilliams", sample("v_code.json")});
  CHECK(ham.code == kExitOk);
  CHECK(has(ham.out, "W_dual (MacWilliams) = X + 3Y"));
  CHECK(has(ham.out, "verdict: true"));
  CHECK(run({"macwilliams", "--form", "cwe", sample("euclidean_example.json")}).code == kExitOk);
  const Run swe = run({"macwilliams", "--form", "swe", sample("hermitian_example.json")});
  CHECK(swe.code == kExitOk);
  CHECK(has(swe.out, "classes: 9"));
  CHECK(run({"macwilliams", "--form", "swe", "--group", "trivial", sample("v_code.json")}).code == kExitOk);
}

TEST_CASE("cyclic and skew checks") {
  const Run c = run({"cyclic-check", sample("psi_example.json")});
  CHECK(c.code == kExitOk);
  CHECK(has(c.out, "quasi-cyclic of index 1: false"));
  CHECK(has(c.out, "components agree: true"));
  const Run s = run({"skew-check", "--theta", sample("theta_swap.json"), sample("v_code.json")});
  CHECK(s.code == kExitOk);
  CHECK(has(s.out, "checks agree: true"));
  const Run inline_theta = run({"skew-check", "--theta", R"({"flip":[1]})", sample("v_code.json")});
  CHECK(inline_theta.out == s.out);
  CHECK(run({"cyclic-check", "-d", "3", sample("psi_example.json")}).code == kExitInputError);
  CHECK(run({"cyclic-check", "--phi", sample("phi_table1_row3.json"), sample("v_code.json")}).code == kExitOk);
}

TEST_CASE("skew construction") {
  const Run good = run({"skew-construct", "--components", sample("skew_components_z2v.json"), "--theta",
                        sample("theta_swap.json")});
  CHECK(good.code == kExitOk);
  CHECK(has(good.out, "certified quasi-theta-cyclic of index 1: true"));
  const Run swap = run({"skew-construct", "--components", sample("skew_components_z2v1v2.json"), "--theta",
                        sample("phi_swap.json")});
  CHECK(swap.code == kExitOk);
  const Run bad = run({"skew-construct", "--components", sample("skew_components_bad.json"), "--theta",
                       sample("theta_swap.json")});
  CHECK(bad.code == kExitMismatch);
  CHECK(has(bad.out, "C_1 is not invariant under rotation by 1"));
}

TEST_CASE("gray images") {
  const Run r = run({"gray", sample("v_code.json")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "psi row 1: (0)"));
  CHECK(has(r.out, "psi row 2: (1)"));
  CHECK(run({"gray", "--phi", sample("phi_table1_row3.json"), sample("v_code.json")}).code == kExitOk);
}

TEST_CASE("table and search") {
  const Run t = run({"table1"});
  CHECK(t.code == kExitOk);
  CHECK(has(t.out, "all rows match: true"));
  CHECK(run({"search-phi", sample("v_code.json"), "--l", "2", "--top", "3"}).code == kExitOk);
}

TEST_CASE("exit codes for bad input and guards") {
  CHECK(run({"analyze", "/nonexistent.json"}).code == kExitInputError);
  CHECK(run({"analyze", sample("v_code.json"), "--bogus"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  const Run g = run({"--guard", "10", "dual", sample("psi_example.json")});
  CHECK(g.code == kExitGuard);
  CHECK(has(g.err, "guard exceeded"));
  CHECK(run({"skew-check", "--theta", R"({"flip":[3]})", sample("v_code.json")}).code == kExitInputError);
}

TEST_CASE("the guard is restored after a run") {
  const std::uint64_t before = enumeration_cap();
  run({"--guard", "10", "dual", sample("psi_example.json")});
  CHECK(enumeration_cap() == before);
}
