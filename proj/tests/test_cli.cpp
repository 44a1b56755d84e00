#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int status;
  std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  std::string command = std::string(QCI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    output.append(buffer.data(), got);
  int raw = pclose(pipe);
  return RunResult{WEXITSTATUS(raw), output};
}

}  // namespace

TEST_CASE("invariant phi prints the sorted multiset") {
  RunResult r = run_cli("invariant phi --knot torus:3 --quandle q6 --cocycle q6z4");
  CHECK(r.status == 0);
  CHECK(r.output == "0:6 1:24\n");

  RunResult s = run_cli("invariant phi --knot sknot:3,3 --quandle q6 --cocycle q6z4");
  CHECK(s.output == "0:30 2:24\n");

  RunResult braid = run_cli("invariant phi --braid \"3: s1^3 s2^-1 s1^3 s2^-1\" "
                            "--quandle q6 --cocycle q6z4");
  CHECK(braid.output == "0:30 2:24\n");
}

TEST_CASE("quandle verify prints per-axiom results") {
  RunResult r = run_cli("quandle verify --name r5");
  CHECK(r.status == 0);
  CHECK(r.output == "axioms: pass pass pass\n");
}

TEST_CASE("quandle make/verify round trip through a file") {
  std::string path = "/tmp/qci_test_r5.qnd";
  RunResult made = run_cli("quandle make --name r5 --out " + path);
  REQUIRE(made.status == 0);
  RunResult verified = run_cli("quandle verify --file " + path);
  CHECK(verified.status == 0);
  CHECK(verified.output == "axioms: pass pass pass\n");
  std::remove(path.c_str());
}

TEST_CASE("knot colorings") {
  RunResult r = run_cli("knot colorings --knot torus:3 --quandle q6");
  CHECK(r.output == "colorings: 30\n");
  RunResult json_out = run_cli("knot colorings --knot sknot:3,3 --quandle q6 --json");
  auto parsed = nlohmann::json::parse(json_out.output);
  CHECK(parsed["count"] == 54);
}

TEST_CASE("cocycle gen and verify") {
  std::string path = "/tmp/qci_test_q6z4.qcy";
  REQUIRE(run_cli("cocycle gen q6z4 --out " + path).status == 0);
  RunResult verified = run_cli("cocycle verify --file " + path + " --quandle q6");
  CHECK(verified.status == 0);
  CHECK(verified.output == "conditions: pass pass\n");
  std::remove(path.c_str());

  std::string mpath = "/tmp/qci_test_m5.qcy";
  REQUIRE(run_cli("cocycle gen mochizuki --p 5 --out " + mpath).status == 0);
  RunResult mverified = run_cli("cocycle verify --file " + mpath + " --quandle r5");
  CHECK(mverified.output == "conditions: pass pass\n");
  std::remove(mpath.c_str());
}

TEST_CASE("cocycle enumerate") {
  RunResult r = run_cli("cocycle enumerate --quandle r3 --modulus 3");
  CHECK(r.output == "solutions: 9\n");
  RunResult capped = run_cli("cocycle enumerate --quandle q6 --modulus 4 --cap 10 --list");
  CHECK(capped.status != 0);
  CHECK_THAT(capped.output, Catch::Matchers::ContainsSubstring("exceeds cap"));
}

TEST_CASE("concordance cor43 json verdict") {
  RunResult r = run_cli("concordance cor43 --l 3 --m 3 --n 3 --r 0 --s 0 --json");
  REQUIRE(r.status == 0);
  auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed["schema"] == "qci.verdict/1");
  CHECK(parsed["obstructed"] == true);
  CHECK(parsed["theorem"] == "thm12");
  CHECK(parsed["witness"]["member"] == 1);
  CHECK(parsed["witness"]["support"] == nlohmann::json::array({0, 1}));
}

TEST_CASE("concordance cor21 and thm11") {
  RunResult pair = run_cli("concordance cor21 --q 3 --qprime 5 --json");
  auto parsed = nlohmann::json::parse(pair.output);
  REQUIRE(parsed.is_array());
  CHECK(parsed[0]["obstructed"] == true);
  CHECK(parsed[1]["obstructed"] == true);

  RunResult mirror5 = run_cli("concordance cor21 --q 5 --mirror --json");
  auto m5 = nlohmann::json::parse(mirror5.output);
  CHECK(m5[0]["obstructed"] == false);
  CHECK(m5[1]["obstructed"] == false);

  RunResult thm = run_cli("concordance thm11 --mod 3 --upper 0:3,1:6 --lower 0:9");
  CHECK(thm.status == 0);
  CHECK_THAT(thm.output, Catch::Matchers::ContainsSubstring("obstructed"));
}

TEST_CASE("invariant omega and twistspun") {
  RunResult omega = run_cli("invariant omega --knot torus:3 --quandle q6 --cocycle q6z4 --r 4");
  CHECK_THAT(omega.output, Catch::Matchers::ContainsSubstring("member 2: 0:6 2:24"));

  RunResult bad_r = run_cli("invariant omega --knot torus:3 --quandle q6 --cocycle q6z4 --r 2");
  CHECK(bad_r.status != 0);
  CHECK_THAT(bad_r.output, Catch::Matchers::ContainsSubstring("multiple of the quandle type"));

  CHECK(run_cli("invariant twistspun --q 3").output == "0:3 1:6\n");
  CHECK(run_cli("invariant twistspun --q 5 --theta 3").output == "0:3\n");
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run_cli("").status != 0);
  CHECK(run_cli("invariant phi --quandle q6 --cocycle q6z4").status != 0);  // no knot
  CHECK(run_cli("knot colorings --braid \"2: s3\" --quandle r3").status != 0);
  CHECK(run_cli("quandle verify --name nosuch").status != 0);
}

TEST_CASE("outputs are byte-identical across parallelism degrees") {
  RunResult one = run_cli("invariant phi --knot sknot:3,9 --quandle q6 --cocycle q6z4 --jobs 1");
  RunResult many = run_cli("invariant phi --knot sknot:3,9 --quandle q6 --cocycle q6z4 --jobs 8");
  CHECK(one.output == many.output);
  CHECK(one.output == "0:30 2:24\n");
}
