#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "fdeg/mu_pipeline.hpp"
#include "json.hpp"

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FDEG_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return std::string(FDEG_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("mu of A5") {
  auto r = run("mu " + fx("A5.grp"));
  CHECK(r.code == 0);
  CHECK(r.out.find("mu = 5\n") != std::string::npos);
}

TEST_CASE("mu-oracle on Z6 gives a two-subgroup witness") {
  auto r = run("mu-oracle " + fx("Z6.grp") + " --limit 100 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mu"] == 5);
  REQUIRE(j["witness"].size() == 2);
  std::size_t sum = 0;
  for (const auto& w : j["witness"]) sum += w["index"].get<std::size_t>();
  CHECK(sum == 5);
}

TEST_CASE("mu of PGL(2,7) as JSON") {
  auto r = run("mu " + fx("PGL27.grp") + " --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 8);
  REQUIRE(j["records"].size() == 1);
  CHECK(j["records"][0]["rule"] == "row 2");
  CHECK(j["status"] == "ok");
}

TEST_CASE("certificate JSON round-trips") {
  for (const char* f : {"PGL27.grp", "A5wrZ2.grp", "A5xA6.grp", "PSL34_graph.grp"}) {
    auto r = run("mu " + fx(f) + " --json");
    auto cert = fdeg::MuCertificate::from_json(r.out);
    CHECK(cert.to_json() == r.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run("order " + fx("M12.grp")).out == "order 95040\n");
  auto missing = run("mu " + fx("PSL34_graph.grp") + " --json");
  CHECK(missing.code == 2);
  auto j = nlohmann::json::parse(missing.out);
  CHECK(j["status"] == "hint-required");
  CHECK(j["total"].is_null());
  auto hinted = run("mu " + fx("PSL34_graph.grp") + " --hint " + fx("PSL34_graph.hint.json"));
  CHECK(hinted.code == 0);
  CHECK(hinted.out.find("mu = 42\n") != std::string::npos);
  CHECK(run("mu " + fx("S4.grp")).code == 1);
  CHECK(run("mu " + fx("no_such_file.grp")).code == 1);
  CHECK(run("mu-oracle " + fx("S6.grp") + " --limit 100").code == 1);
  CHECK(run("frobnicate " + fx("A5.grp")).code != 0);
}

TEST_CASE("other subcommands") {
  CHECK(run("recognize " + fx("PSL34.grp")).out == "PSL(3,4)\n");
  CHECK(run("mu-quotient " + fx("S4_mod_V4.grp")).out == "mu = 3\n");
  auto mn = run("min-normal " + fx("A5xA6.grp"));
  CHECK(mn.code == 0);
  CHECK(mn.out.find("order 60)") != std::string::npos);
  CHECK(mn.out.find("order 360)") != std::string::npos);
  auto soc = run("socle " + fx("A5wrZ2.grp") + " --json");
  auto j = nlohmann::json::parse(soc.out);
  CHECK(j["socle_order"] == 3600);
  CHECK(j["minimal_normals"].size() == 1);
}

TEST_CASE("same seed gives byte-identical output") {
  for (const char* f : {"M12_2.grp", "A5xA6.grp", "AutA6.grp"}) {
    auto a = run(std::string("mu ") + fx(f) + " --json --seed 7");
    auto b = run(std::string("mu ") + fx(f) + " --json --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto s1 = run(std::string("socle ") + fx(f) + " --seed 3");
    auto s2 = run(std::string("socle ") + fx(f) + " --seed 3");
    CHECK(s1.out == s2.out);
  }
}
