// Runs the simplest-fields executable and checks exit codes and payloads.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

std::string g_cli;

struct Run {
  int code = -1;
  std::string out;
  json report() const { return json::parse(out); }
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("family") {
  auto sym = run("family --n 3 --symbolic");
  REQUIRE(sym.code == 0);
  const json f = sym.report()["result"]["f"];
  REQUIRE(f.size() == 4);
  CHECK(f[1]["m_coeffs"][0]["num"] == "-3");
  CHECK(f[1]["m_coeffs"][1]["num"] == "-3");
  CHECK(f[2]["m_coeffs"][1]["num"] == "-3");

  auto cubic = run("family --n 3 --t 1");
  REQUIRE(cubic.code == 0);
  CHECK(cubic.report()["result"]["f"] == json::array({"-1", "-4", "-1", "1"}));
  CHECK(cubic.report()["schema_version"] == "simplest-fields/1");

  auto zero = run("family --n 0");
  REQUIRE(zero.code == 0);
  CHECK(zero.report()["result"]["f"].size() == 1);
}

TEST_CASE("identities") {
  auto r = run("identities --n-max 5 --seed 42 --trials 4");
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["passed"] == true);
  CHECK(run("identities --n-max 1").code == 2);
}

TEST_CASE("integral basis") {
  auto r = run("integral-basis --n 3 --t 1");
  REQUIRE(r.code == 0);
  const json o = r.report()["result"]["order"];
  CHECK(o["index"] == "1");
  CHECK(o["hnf"] == json::array({json::array({"1", "0", "0"}), json::array({"0", "1", "0"}), json::array({"0", "0", "1"})}));

  auto both = run("integral-basis --n 2 --t 3 --strategy both");
  REQUIRE(both.code == 0);
  CHECK(both.report()["result"]["strategies_agree"] == true);
  CHECK(both.report()["result"]["order"]["field_discriminant"] == "13");

  auto sextic = run("integral-basis --n 6 --t 5");
  CHECK(sextic.code == 3);
  CHECK(sextic.report()["status"] == "not_covered");
  CHECK(sextic.report()["result"]["reason"].get<std::string>().find("not squarefree") != std::string::npos);
}

TEST_CASE("irreducibility") {
  auto r = run("irreducibility --n 4 --t 2");
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["witness_prime"] == "7");
  CHECK(r.report()["result"]["eisenstein_verified"] == true);
  CHECK(run("irreducibility --n 3 --t 0").code == 3);
}

TEST_CASE("dual basis") {
  auto r = run("dual-basis --n 4 --t 1");
  REQUIRE(r.code == 0);
  const json res = r.report()["result"];
  CHECK(res["d"] == "36");
  CHECK(res["d_matches"] == true);
  const json row = res["matrix"][3];
  CHECK(row[0] == json({{"num", "-1"}, {"den", "36"}}));
  CHECK(row[1] == json({{"num", "-19"}, {"den", "36"}}));
  CHECK(row[2] == json({{"num", "-1"}, {"den", "4"}}));
  CHECK(row[3] == json({{"num", "1"}, {"den", "18"}}));
}

TEST_CASE("period scan") {
  auto ok = run("period-scan --n 2 --modulus 4 --t-min -30 --t-max 30 --minimality");
  REQUIRE(ok.code == 0);
  CHECK(ok.report()["result"]["consistent"] == true);
  CHECK(ok.report()["result"]["minimality"][0].contains("pair"));
  CHECK(run("period-scan --n 2 --modulus 2 --t-min -20 --t-max 20").code == 1);

  // Worker count does not change the payload.
  auto a = run("period-scan --n 4 --modulus 24 --t-min -40 --t-max 40 --workers 1");
  auto b = run("period-scan --n 4 --modulus 24 --t-min -40 --t-max 40 --workers 3");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.report()["result"].dump() == b.report()["result"].dump());

  auto s = run("period-scan --n 4 --modulus 24 --t-min -200 --t-max 200 --sample-classes 4 --seed 7");
  REQUIRE(s.code == 0);
  CHECK(s.report()["result"]["classes"].size() == 4);
}

TEST_CASE("verify tables") {
  auto r = run("verify-tables --scope bounds");
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["bounds"]["passed"] == true);
}

TEST_CASE("usage errors and output options") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("integral-basis --t 3").code == 2);
  CHECK(run("integral-basis --n 3 --t 1 --strategy fastest").code == 2);
  CHECK(run("integral-basis --n 1 --t 1").code == 2);
  CHECK(run("period-scan --n 2 --modulus 0").code == 2);
  CHECK(run("--help").code == 0);

  auto text = run("family --n 2 --t 3 --format text");
  REQUIRE(text.code == 0);
  CHECK(text.out.find("schema_version = simplest-fields/1") != std::string::npos);

  const std::string path = "cli_test_out.json";
  std::remove(path.c_str());
  auto f = run("family --n 2 --t 3 --out " + path);
  REQUIRE(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  CHECK(json::parse(in)["result"]["n"] == 2);
  std::remove(path.c_str());
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_test <path-to-simplest-fields> [doctest options]\n");
    return 2;
  }
  g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
