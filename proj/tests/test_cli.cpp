// End-to-end tests that drive the installed CLI binary the way a user
// would: spawn it, capture stdout, compare against golden files, and
// pin the exit-code contract.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout only; stderr is discarded
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(HANOI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), output};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.is_open());
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

}  // namespace

TEST_CASE("count --verify prints the counts and the verification line") {
  const CliResult r = run_cli("count --discs 2 --pegs 4 --digraph complete --verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("count_verify_2_4_complete.txt"));
}

TEST_CASE("solve emits the documented move JSON") {
  const CliResult r =
      run_cli("solve --discs 1 --pegs 3 --digraph cycle --from 1 --to 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("solve_1_3_cycle.txt"));
}

TEST_CASE("gen for zero discs emits only the CSV header") {
  const CliResult r = run_cli("gen --discs 0 --pegs 3 --digraph star --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("gen_0_3_star.csv"));
}

TEST_CASE("the two builders emit byte-identical exports") {
  for (const std::string format : {"dot", "csv", "jsonl"}) {
    const CliResult naive = run_cli(
        "gen --discs 2 --pegs 4 --digraph complete --builder naive --format " +
        format);
    const CliResult fast = run_cli(
        "gen --discs 2 --pegs 4 --digraph complete --builder fast --format " +
        format);
    CHECK(naive.exit_code == 0);
    CHECK(fast.exit_code == 0);
    CHECK(naive.output == fast.output);
    CHECK_FALSE(naive.output.empty());
  }
}

TEST_CASE("gen --out writes the same bytes to a file") {
  const std::string path = "gen_out_test.csv";
  const CliResult direct = run_cli("gen --discs 1 --pegs 3 --digraph cycle --format csv");
  const CliResult to_file = run_cli(
      "gen --discs 1 --pegs 3 --digraph cycle --format csv --out " + path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.output.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.is_open());
  std::ostringstream written;
  written << in.rdbuf();
  CHECK(written.str() == direct.output);
  std::remove(path.c_str());
}

TEST_CASE("count --json emits the report document") {
  const CliResult r = run_cli("count --discs 2 --pegs 4 --digraph complete --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{\"n\":2,\"m\":4,\"digraph\":\"complete\",\"per_disc\":[48,24],"
        "\"total\":72,\"source\":\"closed_form\"}\n");
}

TEST_CASE("degree prints one number for --state and a histogram otherwise") {
  const CliResult one = run_cli("degree --discs 2 --pegs 3 --digraph complete --state 11");
  CHECK(one.exit_code == 0);
  CHECK(one.output == "2\n");

  const CliResult all = run_cli("degree --discs 1 --pegs 3 --digraph cycle");
  CHECK(all.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(all.output);
  CHECK(j["n"] == 1);
  CHECK(j["m"] == 3);
  CHECK(j["sum"] == 3);
  CHECK(j["histogram"] == nlohmann::json({{"1", 3}}));
}

TEST_CASE("digraphs load from file: specs") {
  const std::string path = "cycle3_digraph.json";
  {
    std::ofstream out(path);
    out << R"({"pegs": 3, "arcs": [[1, 2], [2, 3], [3, 1]]})";
  }
  const CliResult from_file =
      run_cli("count --discs 2 --pegs 3 --digraph file:" + path + " --verify");
  const CliResult from_name = run_cli("count --discs 2 --pegs 3 --digraph cycle --verify");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output == from_name.output);
  std::remove(path.c_str());
}

TEST_CASE("check sweeps clean at desk scale") {
  const CliResult r = run_cli("check --max-discs 2 --max-pegs 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("ok: n=2 m=4") != std::string::npos);
}

TEST_CASE("usage and validation problems exit with code 1") {
  CHECK(run_cli("gen --discs 2 --pegs 3 --digraph complete").exit_code == 1);  // no --format
  CHECK(run_cli("count --discs 2 --pegs 3").exit_code == 1);                   // no --digraph
  CHECK(run_cli("count --discs 2 --pegs 3 --digraph wheel").exit_code == 1);
  CHECK(run_cli("count --discs 2 --pegs 2 --digraph complete").exit_code == 1);
  CHECK(run_cli("count --discs -1 --pegs 3 --digraph complete").exit_code == 1);
  CHECK(run_cli("solve --discs 2 --pegs 3 --digraph complete --from 11 --to 9").exit_code == 1);
  CHECK(run_cli("degree --discs 2 --pegs 3 --digraph complete --state 123").exit_code == 1);
  CHECK(run_cli("count --discs 2 --pegs 3 --digraph file:no_such_file.json").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);  // a subcommand is required
}

TEST_CASE("a file digraph must agree with --pegs") {
  const std::string path = "pegs_mismatch_digraph.json";
  {
    std::ofstream out(path);
    out << R"({"pegs": 4, "arcs": [[1, 2]]})";
  }
  CHECK(run_cli("count --discs 1 --pegs 3 --digraph file:" + path).exit_code == 1);
  std::remove(path.c_str());
}

TEST_CASE("unsolvable transfers exit with code 2") {
  const std::string path = "one_way_digraph.json";
  {
    std::ofstream out(path);
    out << R"({"pegs": 3, "arcs": [[1, 2], [1, 3]]})";
  }
  const CliResult r = run_cli("solve --discs 1 --pegs 3 --digraph file:" + path +
                              " --from 3 --to 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.empty());  // the explanation goes to stderr
  std::remove(path.c_str());
}

TEST_CASE("state spaces beyond code capacity exit with code 3") {
  CHECK(run_cli("count --discs 80 --pegs 3 --digraph complete --verify").exit_code == 3);
  CHECK(run_cli("gen --discs 80 --pegs 3 --digraph complete --format csv").exit_code == 3);
  // ... but the closed form alone has no capacity ceiling.
  CHECK(run_cli("count --discs 80 --pegs 3 --digraph complete").exit_code == 0);
}

TEST_CASE("--help succeeds") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("gen --help").exit_code == 0);
}
