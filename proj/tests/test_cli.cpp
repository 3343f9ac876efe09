#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(MIRROR_HG_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("verify exits 0 on pass") {
  CliResult r = run_cli("verify --suite periodicity --n 3 --x-order 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[pass] periodicity") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("verify --suite periodicity --n 0").exit_code == 2);
  CHECK(run_cli("verify --suite nonsense --n 3").exit_code == 2);
  CHECK(run_cli("compute nonsense --n 3").exit_code == 2);
  CHECK(run_cli("bogus-verb").exit_code == 2);
}

TEST_CASE("json reports carry the schema fields") {
  CliResult r = run_cli("verify --suite table3 --n 4 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"version\"") != std::string::npos);
  CHECK(r.out.find("\"config\"") != std::string::npos);
  CHECK(r.out.find("\"reports\"") != std::string::npos);
  CHECK(r.out.find("\"check-name\": \"table3\"") != std::string::npos);
  CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("compute output is deterministic and exact") {
  CliResult a = run_cli("compute F --n 2 --x-order 3 --format json");
  CliResult b = run_cli("compute F --n 2 --x-order 3 --format json --jobs 4");
  CHECK(a.exit_code == 0);
  // identical config => byte-identical payload (jobs only affects scheduling)
  CHECK(a.out.substr(a.out.find("\"F\"")) == b.out.substr(b.out.find("\"F\"")));
  CHECK(a.out.find("\"2\"") != std::string::npos);  // exact "p/q" strings
  CliResult ip = run_cli("compute Ip --n 3 --x-order 2 --format csv");
  CHECK(ip.out.find("Ip,0,1,6") != std::string::npos);
  CliResult sym = run_cli("compute symphi --smax 1 --format json");
  CHECK(sym.exit_code == 0);
  CHECK(sym.out.find("\"Lam\"") != std::string::npos);
  CliResult ek = run_cli("compute ek --k 2 --format csv");
  CHECK(ek.out.find("e2,,1,-1") != std::string::npos);
  CHECK(ek.out.find("e2,,2,1") != std::string::npos);
}

TEST_CASE("n-range fan-out with jobs") {
  CliResult r = run_cli("verify --suite picard-fuchs --n-range 2..4 --x-order 8 --jobs 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n=2") != std::string::npos);
  CHECK(r.out.find("n=3") != std::string::npos);
  CHECK(r.out.find("n=4") != std::string::npos);
}

TEST_CASE("environment default order is honored") {
  std::string cmd = std::string("MIRROR_HG_DEFAULT_ORDER=5 ") + MIRROR_HG_BIN +
                    " verify --suite periodicity --n 2 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  pclose(pipe);
  CHECK(out.find("order=5") != std::string::npos);
}
