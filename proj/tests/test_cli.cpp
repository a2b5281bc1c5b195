#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

// CRR_CLI_PATH is injected by the build
#ifndef CRR_CLI_PATH
#error "CRR_CLI_PATH must point at the cli binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(CRR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("degree-1 zero through the cli") {
  RunResult r = run("zeros --n 1 --lambda 2 --eta 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5.00000000000000e-01") != std::string::npos);
}

TEST_CASE("bounds subcommand") {
  RunResult r = run("bounds --n 4 --lambda 1.5 --eta 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("-1.41421356237310e+00") != std::string::npos);
  CHECK(r.out.find("1.41421356237310e+00") != std::string::npos);
}

TEST_CASE("json schema") {
  RunResult r = run("eval --n 2 --lambda 1 --eta 0 --x 0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("{\"meta\":{", 0) == 0);
  CHECK(r.out.find("\"data\":[") != std::string::npos);
  CHECK(r.out.find("-2.50000000000000e-01") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  std::string args = "zeros --n 20 --lambda 0.9 --eta 3.5 --format json";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("lambda sweep emits one block per value") {
  RunResult r = run("zeros --n 3 --eta 2 --sweep 1.0,2.0,4.0");
  CHECK(r.exit_code == 0);
  int rows = 0;
  for (char c : r.out)
    if (c == '\n') ++rows;
  CHECK(rows >= 9 + 1);  // 3 lambdas x 3 zeros + header
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("zeros --n 0 --lambda 1 --eta 0").exit_code == 2);
  CHECK(run("bounds --n 3 --lambda 1 --eta 0").exit_code == 2);
  CHECK(run("eval --n 2 --lambda -1 --eta 0 --x 0").exit_code == 2);
  CHECK(run("table --id 7").exit_code == 2);
}

TEST_CASE("zero tolerance override via environment") {
  std::string cmd = "CRR_ZEROS_TOL=1e-5 " + std::string(CRR_CLI_PATH) +
                    " zeros --n 8 --lambda 1.5 --eta 1 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  CHECK(WEXITSTATUS(pclose(p)) == 0);
  CHECK(out.find("# tolerance = 1.00000000000000e-05") != std::string::npos);
}

TEST_CASE("table 2 marks the suspect row") {
  RunResult r = run("table --id 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suspect (see docs)") != std::string::npos);
}
