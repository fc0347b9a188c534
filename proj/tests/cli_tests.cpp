#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

#ifndef TEST_CATALOG_PATH
#define TEST_CATALOG_PATH "data/catalog.json"
#endif

namespace {

std::string cli_path() {
  const char* p = std::getenv("COCHAR_CLI");
  REQUIRE_MESSAGE(p != nullptr, "COCHAR_CLI must point at the binary");
  return p;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("hilbert rows of the polynomial algebra") {
  RunResult r = run("hilbert --p 1 --q 0 --d 2 --deg 2 --format csv");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "exps,num,den");
  for (std::size_t i = 1; i < ls.size(); ++i)
    CHECK(ls[i].substr(ls[i].size() - 4) == ",1,1");
  CHECK(ls[1] == "\"0,0\",1,1");
}

TEST_CASE("hilbert with one variable") {
  RunResult r = run("hilbert --p 0 --q 1 --d 1 --deg 4");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    CHECK(ls[i] == "\"" + std::to_string(i - 1) + "\",1,1");
  }
}

TEST_CASE("output is deterministic and thread-count invariant") {
  std::string args = "hilbert --p 1 --q 1 --d 3 --deg 6 --format json";
  RunResult a = run(args);
  RunResult b = run(args);
  RunResult c = run(args + " --threads 1");
  RunResult d = run(args + " --threads 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out == d.out);
}

TEST_CASE("table lists multiplicities in canonical order") {
  RunResult r = run("table --p 0 --q 1 --d 2 --deg 2 --format csv");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "lambda,m");
  CHECK(ls[1] == "\"0\",1");
  CHECK(ls[2] == "\"1\",1");
  CHECK(ls[3] == "\"2\",1");
  CHECK(ls[4] == "\"1,1\",1");
}

TEST_CASE("json output carries metadata and round-trips") {
  RunResult r = run("table --p 1 --q 0 --d 2 --deg 4 --format json");
  CHECK(r.exit_code == 0);
  json obj = json::parse(r.out);
  CHECK(obj["meta"]["p"] == 1);
  CHECK(obj["meta"]["q"] == 0);
  CHECK(obj["meta"]["d"] == 2);
  CHECK(obj["meta"]["cap"] == 4);
  CHECK(obj["meta"]["catalog_checksum"] == "f94d922e656c491a");
  CHECK(obj["rows"].size() == 5);  // one-row shapes only
  CHECK(obj.dump(1) + "\n" == r.out);
}

TEST_CASE("verify reports exact agreement") {
  RunResult r = run("verify --entry f2 --d 4 --deg 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("EQUAL up to degree 10") != std::string::npos);
  RunResult r3 = run("verify --entry R03_2var --d 2 --deg 20");
  CHECK(r3.exit_code == 0);
}

TEST_CASE("verify exit codes for unknown and corrupted entries") {
  CHECK(run("verify --entry nosuch --d 2 --deg 4").exit_code == 2);

  // corrupt one coefficient; the comparison localizes the first mismatch
  std::ifstream in(TEST_CATALOG_PATH);
  json cat;
  in >> cat;
  for (auto& e : cat)
    if (e["id"] == "f2") e["terms"][0]["num"][0][0] = "2";
  std::string bad = "tmp_cli_bad_catalog.json";
  {
    std::ofstream out(bad);
    out << cat.dump(1) << "\n";
  }
  RunResult r = run("verify --entry f2 --d 4 --deg 6 --catalog " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("MISMATCH at lambda=(0)") != std::string::npos);

  // the env override points at the same corrupted file; a flag beats it
  setenv("COCHAR_CATALOG", bad.c_str(), 1);
  CHECK(run("verify --entry f2 --d 4 --deg 6").exit_code == 1);
  CHECK(run("verify --entry f2 --d 4 --deg 6 --catalog " +
            std::string(TEST_CATALOG_PATH))
            .exit_code == 0);
  unsetenv("COCHAR_CATALOG");
  std::remove(bad.c_str());
}

TEST_CASE("asym interpolation against the catalog") {
  RunResult r = run("asym --entry R02_2var --mode interpolate");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("1/144*n1^3*n2^4") != std::string::npos);
}

TEST_CASE("asym pipeline window errors exit with the window code") {
  RunResult r = run("asym --pipeline 0,4 --mode interpolate", true);
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("window") != std::string::npos);
  CHECK(run("asym --pipeline 0,2 --mode interpolate --window 6,9,9,15,3,6")
            .exit_code == 4);
}

TEST_CASE("asym pipeline interpolation matches the catalog cross-path") {
  RunResult r =
      run("asym --pipeline 0,2 --mode interpolate --window 6,10,9,17,3,6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MATCH") != std::string::npos);
}

TEST_CASE("asym ratio failure at small samples exits nonzero") {
  RunResult r = run("asym --entry R11_Vd --mode ratio --points 4,8");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("schur subcommand prints the polynomial") {
  RunResult r = run("schur --lambda 2,1 --d 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2*t1*t2*t3") != std::string::npos);
  CHECK(run("schur --lambda 1,2 --d 3").exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 2);
  CHECK(run("hilbert --p 1").exit_code == 2);
  CHECK(run("table --p 0 --q 0 --d 2 --deg 4").exit_code == 2);
  CHECK(run("nosuchcmd").exit_code == 2);
  CHECK(run("asym --mode ratio").exit_code == 2);
}

TEST_CASE("selftest passes") {
  RunResult r = run("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
