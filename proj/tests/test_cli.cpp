#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("CYCLOSUM_CLI");
  REQUIRE_MESSAGE(path != nullptr, "CYCLOSUM_CLI must point at the binary");
  return path;
}

std::string golden_dir() {
  const char* path = std::getenv("CYCLOSUM_GOLDEN_DIR");
  REQUIRE_MESSAGE(path != nullptr, "CYCLOSUM_GOLDEN_DIR must point at tests/golden");
  return path;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("decide command") {
  const auto r = run("decide -n 10 -l 24 -m 60");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "decide: n=10 l=24 m=60\n"
                    "reduction: d=12 m'=5 primes={5}\n"
                    "representation: 10 = 2*5\n"
                    "result: true\n");

  const auto f = run("decide -n 1 -l 1 -m 2");
  CHECK(f.exit_code == 0);
  CHECK(f.output.find("result: false") != std::string::npos);

  const auto gap = run("decide -n 7 -l 1 -m 15");
  CHECK(gap.exit_code == 0);
  CHECK(gap.output.find("representation: none (7 is a gap of {3,5})") != std::string::npos);
  CHECK(gap.output.find("result: false") != std::string::npos);

  const auto degenerate = run("decide -n 4 -l 6 -m 6");
  CHECK(degenerate.exit_code == 0);
  CHECK(degenerate.output.find("degenerate: m divides l") != std::string::npos);
  CHECK(degenerate.output.find("result: false") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("decide -n 10 -l 24").exit_code == 1);
  CHECK(run("decide -n 0 -l 1 -m 6").exit_code == 1);
  CHECK(run("bogus").exit_code == 1);
  CHECK(run("").exit_code == 1);
}

TEST_CASE("table reproduces the golden m=60 table") {
  const auto r = run("table -m 60");
  CHECK(r.exit_code == 0);
  CHECK(r.output == read_file(golden_dir() + "/table_m60.txt"));
}

TEST_CASE("table edge orders") {
  CHECK(run("table -m 1").output == "d | W(d)\n1 | empty\n");
  CHECK(run("table -m 4").output == "d | W(d)\n1 | empty\n2 | 2N\n4 | 2N\n");
}

TEST_CASE("witness then verify round trip") {
  const std::string cert_path = "/tmp/cyclosum_test_cert.json";
  const auto w = run("witness -n 5 -l 1 -m 6 --verify --out " + cert_path);
  CHECK(w.exit_code == 0);
  CHECK(w.output.find("result: found") != std::string::npos);
  CHECK(w.output.find("verified: true") != std::string::npos);

  const auto v = run("verify " + cert_path);
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("result: valid") != std::string::npos);

  // tamper with one exponent: flips the verdict, still exit 0
  std::string text = read_file(cert_path);
  const auto pos = text.rfind("      4,");
  REQUIRE(pos != std::string::npos);
  text[pos + 6] = '5';
  std::ofstream(cert_path) << text;
  const auto bad = run("verify " + cert_path);
  CHECK(bad.exit_code == 0);
  CHECK(bad.output.find("result: invalid") != std::string::npos);
  CHECK(bad.output.find("reason: power sum does not vanish") != std::string::npos);
  std::remove(cert_path.c_str());
}

TEST_CASE("witness distinct refusal explains itself") {
  const auto r = run("witness -n 5 -l 1 -m 6 --distinct");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("result: none") != std::string::npos);
  CHECK(r.output.find("H(5;1,6)=2 > 1") != std::string::npos);

  const auto d = run("witness -n 3 -l 8 -m 12 --distinct");
  CHECK(d.exit_code == 0);
  CHECK(d.output.find("result: found") != std::string::npos);
}

TEST_CASE("height command") {
  const auto r = run("height -n 5 -l 1 -m 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("result: h=2") != std::string::npos);
  CHECK(r.output.find("method: exhaustive") != std::string::npos);

  const auto one = run("height -n 2 -l 1 -m 2");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("result: h=1") != std::string::npos);

  const auto undef = run("height -n 7 -l 1 -m 5");
  CHECK(undef.exit_code == 0);
  CHECK(undef.output.find("result: undefined") != std::string::npos);

  const auto tight = run("height -n 24 -l 1 -m 16 --budget 20");
  CHECK(tight.exit_code == 2);
  CHECK(tight.output.find("result: unknown") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  for (const std::string& cmd :
       {std::string("decide -n 10 -l 24 -m 60"), std::string("table -m 60"),
        std::string("witness -n 6 -l 8 -m 12 --distinct"), std::string("height -n 5 -l 1 -m 6")}) {
    CHECK(run(cmd).output == run(cmd).output);
  }
}

TEST_CASE("json records parse and round-trip") {
  for (const std::string& cmd :
       {std::string("decide -n 10 -l 24 -m 60 --json"), std::string("table -m 12 --json"),
        std::string("witness -n 5 -l 1 -m 6 --json"),
        std::string("height -n 5 -l 1 -m 6 --json")}) {
    const auto r = run(cmd);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.contains("command"));
    CHECK(j.contains("inputs"));
    CHECK(j.contains("result"));
    CHECK(j.contains("elapsed_ms"));
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }

  const auto w = run("witness -n 5 -l 1 -m 6 --json");
  const auto j = nlohmann::json::parse(w.output);
  CHECK(j["result"]["found"] == true);
  CHECK(j["certificate"]["n"] == 5);
}
