#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CORECALC_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string data(const std::string& name) {
  return std::string(CORECALC_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("invariants command on the four-point ring") {
  auto res = run("invariants " + data("four_points_fp.ring"));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("a 1") != std::string::npos);
  CHECK(res.output.find("multiplicity 4") != std::string::npos);
}

TEST_CASE("non-CM input yields a flagged partial report, exit 0") {
  auto res = run("invariants " + data("skew_lines.ring"));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("cohen-macaulay no") != std::string::npos);
  CHECK(res.output.find("a/b/c/type unavailable") != std::string::npos);
}

TEST_CASE("core command agrees between methods") {
  auto res = run("core " + data("four_points_fp.ring") + " --power 1 --method both");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("agreement: yes") != std::string::npos);
  CHECK(res.output.find("x0^2") != std::string::npos);
}

TEST_CASE("points cb on the four-point configuration") {
  auto res = run("points " + data("four_points_fp.pts") + " cb");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("cayley-bacharach: no") != std::string::npos);
}

TEST_CASE("points yz on the collinear split") {
  auto res = run("points " + data("four_points_fp.pts") +
                 " yz --z 3 --f x0 --format json");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"a_prime\": -1") != std::string::npos);
}

TEST_CASE("verify suite runs and passes") {
  auto res = run("verify " + data("plane_cubic.ring") + " --suite colon1 --seed 5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("[PASS]") != std::string::npos);
  CHECK(res.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("cb JSON report matches the golden schema byte for byte") {
  auto res = run("points " + data("four_points_fp.pts") + " cb --seed 0 --format json");
  REQUIRE(res.exit_code == 0);
  auto produced = nlohmann::ordered_json::parse(res.output);
  std::ifstream golden_file(data("four_points_cb_golden.json"));
  REQUIRE(golden_file.good());
  std::stringstream buf;
  buf << golden_file.rdbuf();
  auto golden = nlohmann::ordered_json::parse(buf.str());
  CHECK(produced["report"].dump(2) == golden.dump(2));
}

TEST_CASE("cutoff and grid overrides are accepted") {
  auto res = run("verify " + data("four_points_fp.pts") +
                 " --suite ann-omega --cutoff 4 --seed 2");
  CHECK(res.exit_code == 0);
  auto grid = run("verify " + data("four_points_fp.pts") +
                  " --suite colon1 --i 4 --j 2 --seed 2");
  CHECK(grid.exit_code == 0);
  CHECK(grid.output.find("(i=4,j=2)") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run("invariants /nonexistent.ring").exit_code == 2);
  CHECK(run("verify " + data("plane_cubic.ring") + " --suite nonsense").exit_code == 2);
  CHECK(run("points " + data("four_points_fp.pts") + " yz --z 0 --f x0").exit_code == 2);
}

TEST_CASE("identical jobs give byte-identical JSON") {
  std::string job = "verify " + data("four_points_fp.pts") +
                    " --suite core-vs-oracle --seed 17 --format json";
  auto a = run(job);
  auto b = run(job);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(!a.output.empty());

  std::string inv = "invariants " + data("four_points_fp.ring") +
                    " --seed 3 --format json";
  CHECK(run(inv).output == run(inv).output);
}

TEST_CASE("CORECALC_SEED is the seed fallback") {
  std::string cmd = std::string("env CORECALC_SEED=55 ") + CORECALC_BIN +
                    " points " + data("four_points_fp.pts") +
                    " core --format json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string via_env;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) via_env += buf.data();
  pclose(pipe);

  auto explicit_seed =
      run("points " + data("four_points_fp.pts") + " core --seed 55 --format json");
  CHECK(via_env == explicit_seed.output);
  CHECK(via_env.find("\"seed\": 55") != std::string::npos);
}
