#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ptc/cli.hpp"

using namespace ptc;

namespace {

std::string model(const std::string& name) { return std::string(MODELS_DIR) + "/" + name; }

std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("validate prints the shape of a good model") {
  CliRun r = run({"validate", model("ky.model")});
  CHECK(r.code == 0);
  CHECK(r.out.find("model ky: 3 generators") != std::string::npos);
  CHECK(r.out.find("d(z) = x*y") != std::string::npos);
  CHECK(r.out.find("fiber generators all odd: yes") != std::string::npos);
  CHECK(r.out.find("algebra: finite-dimensional, top degree 11") != std::string::npos);
}

TEST_CASE("exit codes split semantic failures from parse failures") {
  CliRun bad = run({"validate", model("badmodel.model")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(bad.err.find("'w'") != std::string::npos);

  CliRun missing = run({"validate", model("no_such_file.model")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  std::string bad_path = scratch("cli_malformed.model");
  std::ofstream tmp(bad_path);
  tmp << "[generators]\nx banana\n";
  tmp.close();
  CliRun malformed = run({"validate", bad_path});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("line 2") != std::string::npos);

  CliRun nosub = run({"frobnicate", model("ky.model")});
  CHECK(nosub.code == 2);

  CliRun badr = run({"zcl", model("ky.model"), "--r", "0"});
  CHECK(badr.code == 2);

  CliRun badassert = run(
      {"zcl", model("ky.model"), "--assert", "cohomology_vanishes_above(soon)=wishful"});
  CHECK(badassert.code == 1);
}

TEST_CASE("zcl reports value, status and first witness degree") {
  CliRun r = run({"zcl", model("ky.model"), "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("zcl_2(ky) = 3 [exact]") != std::string::npos);
  CHECK(r.out.find("degree 14") != std::string::npos);
  CHECK(r.out.find("complete: structural top") != std::string::npos);
}

TEST_CASE("a partial window downgrades the verdict visibly") {
  CliRun r = run({"zcl", model("hyperbolic_truncated.model"), "--r", "2", "--max-degree", "14"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[window_limited]") != std::string::npos);
  CHECK(r.out.find("(modulo truncation)") != std::string::npos);
  CHECK(r.out.find("the value is a lower bound") != std::string::npos);
}

TEST_CASE("the witness subcommand prints a checkable certificate") {
  CliRun r = run({"htc-witness", model("ky.model"), "--r", "2", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness for k = 2 at degree 11") != std::string::npos);
  CHECK(r.out.find("certificate:") != std::string::npos);
  CHECK(r.out.find("hence TC_2 >= 3") != std::string::npos);

  CliRun none = run({"htc-witness", model("ky.model"), "--r", "2", "--k", "3"});
  CHECK(none.code == 0);
  CHECK(none.out.find("no witness for k = 3") != std::string::npos);
  CHECK(none.out.find("proves nothing") != std::string::npos);
}

TEST_CASE("tc closes the sandwich and cites routes") {
  CliRun r = run({"tc", model("ky.model"), "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("TC_2(ky) = 3 [exact]") != std::string::npos);
  CHECK(r.out.find("odd-fiber formula") != std::string::npos);

  CliRun kept = run({"tc", model("stiefel_n2.model"), "--r", "2", "--keep", "x,z"});
  CHECK(kept.code == 0);
  CHECK(kept.out.find("= 3 [conditional]") != std::string::npos);
  CHECK(kept.out.find("odd-extension bound") != std::string::npos);
  CHECK(kept.out.find("assertions used:") != std::string::npos);
}

TEST_CASE("genfun prints the series and its closed form") {
  CliRun r = run({"genfun", model("ky.model"), "--rmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("z^1: TC_2 = 3 [exact]") != std::string::npos);
  CHECK(r.out.find("z^4: TC_5 = 12 [exact]") != std::string::npos);
  CHECK(r.out.find("P(z) = 3*z") != std::string::npos);
  CHECK(r.out.find("note the factor of z") != std::string::npos);
}

TEST_CASE("diffnil prints one comparison row per r") {
  CliRun r = run({"diffnil", model("ky.model"), "--rmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fiber cup-length = 2 [exact]") != std::string::npos);
  CHECK(r.out.find("r = 2: zcl_3 - zcl_2 = 6 - 3 = 3 >= 2  ok") != std::string::npos);
  CHECK(r.out.find("holds on every tested row") != std::string::npos);

  // A genuine violation is reported as a finding, not as an error.
  CliRun v = run({"diffnil", model("not_tncz.model"), "--rmax", "4"});
  CHECK(v.code == 0);
  CHECK(v.out.find("r = 3: zcl_4 - zcl_3 = 5 - 4 = 1 < 2  VIOLATION") != std::string::npos);
  CHECK(v.out.find("the expected growth pattern fails for this model") != std::string::npos);
  CHECK(v.err.find("capped at 64") != std::string::npos);
}

TEST_CASE("an unresolvable series stops honestly instead of guessing") {
  CliRun r = run({"genfun", model("hyperbolic_truncated.model"), "--rmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no licensed exact route") != std::string::npos);
  CHECK(r.out.find("F(z)") == std::string::npos);
  CHECK(r.err.find("pass --max-degree to widen") != std::string::npos);
}

TEST_CASE("json reports are deterministic across runs") {
  std::string pa = scratch("cli_out_a.json");
  std::string pb = scratch("cli_out_b.json");
  CliRun a = run({"tc", model("ky.model"), "--r", "2", "--json", pa});
  CliRun b = run({"tc", model("ky.model"), "--r", "2", "--json", pb});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  std::string ja = slurp(pa);
  std::string jb = slurp(pb);
  CHECK_FALSE(ja.empty());
  CHECK(ja == jb);
  CHECK(ja.find("\"command\": \"tc\"") != std::string::npos);
  CHECK(ja.find("\"exact\": 3") != std::string::npos);

  std::string pc = scratch("cli_out_c.json");
  CliRun v = run({"validate", model("stiefel_n2.model"), "--json", pc});
  REQUIRE(v.code == 0);
  std::string jc = slurp(pc);
  CHECK(jc.find("\"fiber_dim\": 9") != std::string::npos);
  CHECK(jc.find("\"pure\": true") != std::string::npos);
}
