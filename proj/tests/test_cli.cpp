// End-to-end checks of the command line tool via a subprocess.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* exe = std::getenv("WQSYM_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "WQSYM_CLI must point at the binary");
  const std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run_cli("enumerate --size 3 --filter red-irr");
  CHECK(r.status == 0);
  CHECK(r.out == "111\n121\n132\n212\n");
  CHECK(run_cli("enumerate --size 5 --format count").out == "541\n");
  CHECK(run_cli("enumerate --size 0").out == "e\n");
  CHECK(run_cli("enumerate --size 4 --filter rb-irr --format count").out == "22\n");
}

TEST_CASE("factor") {
  CHECK(run_cli("factor --mode gd 54664312").out == "21331 | 1 | 12\n");
  CHECK(run_cli("factor --mode red 21331").out == "1 (*) 1221\n");
  CHECK(run_cli("factor --mode blue 112").out == "11 (*) 1\n");
  CHECK(run_cli("factor --mode rb 56361124").out == "1 (*) 112 (*) 3132\n");
  CHECK(run_cli("factor --mode red 21").status != 0);
}

TEST_CASE("forest output") {
  auto r = run_cli("forest --mode rb 212");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"scheme\": \"red-blue\"") != std::string::npos);
  CHECK(r.out.find("\"value\": \"11\"") != std::string::npos);
  auto dot = run_cli("forest --mode red --format dot 212");
  CHECK(dot.out.find("digraph") != std::string::npos);
  auto skel = run_cli("forest --mode red --skeleton 876795343912");
  CHECK(skel.out.find("431214") != std::string::npos);
  CHECK(run_cli("forest --mode red e").out.find("\"trees\": []") != std::string::npos);
}

TEST_CASE("op") {
  auto r = run_cli("op --basis R --op prec 211 12");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "R[21341] + R[23141] + R[23411] + R[32141] + R[32411] + R[34211]\n");
  auto c = run_cli("op --basis Q --op copr-prec 212536434");
  CHECK(c.out == "Q[2123434](x)Q[12] + Q[21253434](x)Q[1]\n");
  CHECK(run_cli("op --basis M --op prec 1").status == 2);
}

TEST_CASE("matrix") {
  auto r = run_cli("matrix --which P2R --size 3 --order paper");
  CHECK(r.status == 0);
  CHECK(r.out.find(",123,132,213,231,312,321,122,212,221,112,121,211,111") == 0);
  CHECK(r.out.find("212,.,.,.,.,.,.,1,1,.,.,.,.,.") != std::string::npos);
  auto one = run_cli("matrix --which P2R --size 1");
  CHECK(one.out == ",1\n1,1\n");
  auto strict = run_cli("matrix --which Q2R --size 1 --strict-zeros");
  CHECK(strict.out == ",1\n1,1\n");
}

TEST_CASE("involution") {
  CHECK(run_cli("involution 2314").out == "3124\n");
  CHECK(run_cli("involution 1").out == "1\n");
  auto table = run_cli("involution --table 4");
  CHECK(table.status == 0);
  CHECK(table.out.find("2314 3124\n") != std::string::npos);
  int lines = 0;
  for (char ch : table.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 75);
}

TEST_CASE("verify") {
  auto r = run_cli("verify --suite dims --max-size 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
  auto vac = run_cli("verify --suite axioms --max-size 0");
  CHECK(vac.status == 0);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("bogus").status == 2);
  CHECK(run_cli("enumerate").status != 0);
}
