#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "rankcover/table.hpp"

namespace {
struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RANKCOVER_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) { return "/tmp/rankcover_cli_" + name; }
}  // namespace

TEST_CASE("bound") {
  Run a = run("bound -q2 -m4 -n4 -r1");
  CHECK(a.code == 0);
  CHECK(a.out.find("best: 293") != std::string::npos);
  Run b = run("bound -q2 -m2 -n2 -r2");
  CHECK(b.code == 0);
  CHECK(b.out.find("K_R = 1") != std::string::npos);
  Run c = run("bound -q2 -m5 -n4 -r2 --json");
  REQUIRE(c.code == 0);
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["best_upper"] == "256");
  CHECK(j["best_lower"] == "33");
  CHECK(j["params"]["m"] == 5);
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(run("bound -q4 -m2 -n2 -r1").code == 2);
  CHECK(run("bound -m2").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("table") {
  Run a = run("table --max-m 4 --analytic-only --only-failures");
  CHECK(a.code == 0);
  CHECK(a.out.find(" 0 mismatches") != std::string::npos);
  Run b = run("table --linear --max-m 5");
  CHECK(b.code == 0);
  CHECK(b.out.find("5 4 | e 2 A") != std::string::npos);
  Run c = run("table --min-m 5 --max-m 4");
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  Run d = run("table --max-m 3 --csv");
  CHECK(d.out.rfind("m,n,rho", 0) == 0);
}

TEST_CASE("verify") {
  const std::string f = rankcover::data_path("codes/kr_2_2_2_1.sv");
  Run a = run("verify " + f + " -r1");
  CHECK(a.code == 0);
  CHECK(a.out.find("PASS") != std::string::npos);
  Run b = run("verify " + f + " -r0");
  CHECK(b.code == 1);
  CHECK(b.out.find("covering radius = 1") != std::string::npos);
  std::ofstream(tmp("bad.sv")) << "# gf(2^2) n=2\nx^2\n";
  CHECK(run("verify " + tmp("bad.sv") + " -r1").code == 2);
  Run j = run("verify " + f + " -r1 --json");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["K"] == 3);
  CHECK(doc["radius_verified"] == 1);
}

TEST_CASE("construct") {
  Run a = run("construct jsl -q2 -m2 -n2 -r1 --out " + tmp("jsl.sv"));
  REQUIRE(a.code == 0);
  std::ifstream cert_in(tmp("jsl.sv.json"));
  auto cert = nlohmann::json::parse(cert_in);
  CHECK(cert["K"] == 3);
  CHECK(cert["radius_verified"] == 1);
  CHECK(cert["method"] == "jsl");
  CHECK(cert.contains("seed"));
  CHECK(run("verify " + tmp("jsl.sv") + " -r1").code == 0);

  REQUIRE(run("construct gabidulin -q2 -m5 -n5 -k1 --out " + tmp("gab.sv")).code == 0);
  Run g = run("verify " + tmp("gab.sv") + " -r4");
  CHECK(g.code == 0);
  CHECK(g.out.find("covering radius = 4") != std::string::npos);
  CHECK(run("verify " + tmp("gab.sv") + " -r3").code == 1);

  REQUIRE(run("construct embed -q2 -m2 -n2 -d2 -u1 --out " + tmp("emb.sv")).code == 0);
  Run e = run("verify " + tmp("emb.sv") + " -r1");
  CHECK(e.code == 0);
  CHECK(e.out.find("gf(2^3") != std::string::npos);

  CHECK(run("construct mrd -q2 -m3 -n3 -d2 -r1 --out " + tmp("mrd.sv")).code == 0);
  CHECK(run("construct local -q2 -m2 -n2 -r1 -K2 --restarts 2 --out " + tmp("loc.sv")).code == 1);
  CHECK(run("construct local -q2 -m2 -n2 -r1 -K3 --out " + tmp("loc.sv")).code == 0);
  CHECK(run("construct magic -q2 -m2 -n2").code == 2);
}

TEST_CASE("intersect and volume") {
  CHECK(run("intersect -q2 -m5 -n3 -r2 -s2 -d3").out == "1232\n");
  CHECK(run("intersect -q2 -m6 -n4 -r3 -s3 -d9").out == "0\n");
  Run c = run("intersect -q2 -m4 -n3 -r2 -s1 -d2 --closed-form");
  CHECK(c.code == 0);
  CHECK(c.out.find("58 (agrees)") != std::string::npos);
  Run v = run("volume -q2 -m4 -n4 -r2 --json");
  CHECK(nlohmann::json::parse(v.out)["V"] == "7576");
}
