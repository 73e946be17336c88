#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(CIVAN_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(CIVAN_FIXTURES_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(CIVAN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_golden(const std::string& args, const std::string& golden_name) {
  CAPTURE(args);
  RunResult run = run_cli(args);
  CHECK(run.exit_code == 0);
  CHECK(run.output == golden(golden_name));
}

}  // namespace

TEST_CASE("golden outputs are byte-stable") {
  check_golden("enumerate --input " + fixture("az12.json") + " --format text",
               "enumerate-az12.text.golden");
  check_golden("enumerate --input " + fixture("az13.json"), "enumerate-az13.json.golden");
  check_golden("ideal --input " + fixture("az13.json"), "ideal-az13.json.golden");
  check_golden("ideal --input " + fixture("az12.json"), "ideal-az12.json.golden");
  check_golden("ideal --input " + fixture("s2-q5.json") + " --format text",
               "ideal-s2-q5.text.golden");
  check_golden("classify --input " + fixture("az12.json"), "classify-az12.json.golden");
  check_golden("classify --input " + fixture("s2-q5.json") + " --format text",
               "classify-s2-q5.text.golden");
  check_golden("gb --input " + fixture("lemma-nov12-14.json") + " --format text",
               "gb-lemma-nov12-14.text.golden");
  check_golden("gb --input " + fixture("subcase-b.json") + " --format text",
               "gb-subcase-b.text.golden");
  check_golden("gb --input " + fixture("subcase-d.json") + " --format text",
               "gb-subcase-d.text.golden");
  check_golden("code --input " + fixture("az13.json") + " --degree 1",
               "code-az13-d1.json.golden");
  check_golden("check --input " + fixture("az13.json"), "check-az13.json.golden");
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string args = "ideal --input " + fixture("az12.json");
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("inline JSON input") {
  RunResult run = run_cli(R"(enumerate --input {\"p\":3,\"m\":1,\"n\":1,\"monomials\":[[2]]})");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("\"count\": 1") != std::string::npos);
}

TEST_CASE("check reports a non-clutter parameterization") {
  RunResult run = run_cli(
      R"(check --input {\"p\":3,\"m\":1,\"n\":2,\"monomials\":[[1,1],[1,0]]} --format text)");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("clutter_type false") != std::string::npos);
}

TEST_CASE("exit codes") {
  SUBCASE("precondition violations exit 2") {
    CHECK(run_cli("enumerate --input " + fixture("missing.json")).exit_code == 2);
    CHECK(run_cli(R"(enumerate --input {\"p\":4,\"m\":1,\"n\":1,\"monomials\":[[1]]})")
              .exit_code == 2);
    CHECK(run_cli(R"(classify --input {\"p\":3,\"m\":1,\"n\":2,\"monomials\":[[1,1],[1,0]]})")
              .exit_code == 2);
    CHECK(run_cli("nonsense --input x").exit_code == 2);
    CHECK(run_cli("enumerate").exit_code == 2);
  }
  SUBCASE("budget violations exit 3") {
    CHECK(run_cli("enumerate --input " + fixture("az12.json") + " --budget-points 100")
              .exit_code == 3);
  }
  SUBCASE("help exits 0") { CHECK(run_cli("--help").exit_code == 0); }
}

TEST_CASE("lex order is honored by gb") {
  const std::string inline_gens =
      R"({\"p\":3,\"m\":1,\"s\":3,\"generators\":[)"
      R"({\"terms\":[{\"coeff\":1,\"exp\":[1,1,0]},{\"coeff\":-1,\"exp\":[0,1,1]}]},)"
      R"({\"terms\":[{\"coeff\":1,\"exp\":[1,0,1]},{\"coeff\":-1,\"exp\":[0,1,1]}]}]})";
  RunResult run = run_cli("gb --input " + inline_gens + " --order lex --format text");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("t2^2*t3 - t2*t3^2") != std::string::npos);
}
