#include "doctest.h"
#include "fdeg/error.hpp"
#include "fdeg/mu_pipeline.hpp"
#include "fdeg/oracle.hpp"
#include "fixtures.hpp"

using namespace fdeg;

namespace {
RecognitionHint load_hint(const std::string& name) { return read_hint_file(fixture_path(name + ".hint.json")); }

std::uint64_t pipeline_mu(const PermGroup& g, const std::vector<RecognitionHint>& hints = {}) {
  auto cert = mu_fitting_free(g, hints);
  REQUIRE(cert.total);
  return *cert.total;
}
}  // namespace

TEST_CASE("induced automorphism groups") {
  auto a5 = PermGroup::alternating(5);
  auto a = induced_aut_group(a5, a5, {a5});
  CHECK(a.a_order == 60);
  auto s5 = PermGroup::symmetric(5);
  CHECK(induced_aut_group(s5, a5, {a5}).a_order == 120);
  auto wr = load_fixture("A5wrZ2");
  auto f = simple_factors(load_fixture("A5xA5"));
  auto w = induced_aut_group(wr, f[0], f);
  CHECK(w.normalizer.order() == 3600);
  CHECK(w.centralizer.order() == 60);
  CHECK(w.a_order == 60);
  CHECK(w.outer_order == 1);
}

TEST_CASE("table rows on fixtures") {
  auto pgl = mu_fitting_free(load_fixture("PGL27"));
  REQUIRE(pgl.records.size() == 1);
  CHECK(pgl.records[0].rule == "row 2");
  CHECK(pgl.total == 8u);
  auto s6 = mu_fitting_free(load_fixture("S6"));
  CHECK(s6.records[0].rule == "default");
  CHECK(s6.records[0].detail == "A embeds in Sym(6)");
  CHECK(s6.total == 6u);
  auto aut = mu_fitting_free(load_fixture("AutA6"));
  CHECK(aut.records[0].rule == "row 1");
  CHECK(aut.total == 10u);
  auto s7 = mu_fitting_free(load_fixture("S7"));
  CHECK(s7.records[0].factor_name == "Alt(7)");
  CHECK(s7.total == 7u);
  auto m12 = mu_fitting_free(load_fixture("M12_2"));
  CHECK(m12.records[0].rule == "row 3");
  CHECK(m12.total == 24u);
  CHECK(pipeline_mu(load_fixture("M12")) == 12);
}

TEST_CASE("pipeline agrees with the oracle") {
  for (const char* name : {"A5", "S5", "A6", "S6", "PSL27", "PGL27", "PSL28", "PGammaL28", "PSL211", "AutA6"}) {
    CAPTURE(name);
    auto g = load_fixture(name);
    auto mu = pipeline_mu(g);
    CHECK(mu == mu_oracle(list_elements(g, 2000), 5000).mu);
    CHECK(mu <= g.degree());
  }
}

TEST_CASE("sums over minimal normal subgroups") {
  auto wr = mu_fitting_free(load_fixture("A5wrZ2"));
  REQUIRE(wr.records.size() == 1);
  CHECK(wr.records[0].ell == 2);
  CHECK(wr.total == 10u);
  auto prod = mu_fitting_free(load_fixture("A5xA6"));
  REQUIRE(prod.records.size() == 2);
  CHECK(prod.total == 11u);
  std::uint64_t sum = 0;
  for (const auto& r : prod.records) sum += r.ell * *r.mu;
  CHECK(prod.total == sum);
  // oracle on the factors and the degree bound
  CHECK(mu_oracle(list_elements(PermGroup::alternating(5), 100)).mu + mu_oracle(list_elements(PermGroup::alternating(6), 400)).mu == 11);
  CHECK(pipeline_mu(load_fixture("A5xA5")) == 10);
}

TEST_CASE("hints for PSL(3,4)") {
  auto psl = load_fixture("PSL34");
  auto plain = mu_fitting_free(psl);
  CHECK(plain.records[0].factor_name == "PSL(3,4)");
  CHECK(plain.total == 21u);
  auto hinted = mu_fitting_free(psl, {load_hint("PSL34")});
  CHECK(hinted.total == plain.total);

  auto graph = load_fixture("PSL34_graph");
  auto partial = mu_certificate(graph);
  CHECK(partial.status == "hint-required");
  CHECK_FALSE(partial.total);
  CHECK_THROWS_AS(mu_fitting_free(graph), HintRequired);
  auto full = mu_fitting_free(graph, {load_hint("PSL34_graph")});
  CHECK(full.records[0].rule == "row 11");
  CHECK(full.records[0].hint_used);
  CHECK(full.total == 42u);
}

TEST_CASE("inconsistent hints are rejected") {
  auto graph = load_fixture("PSL34_graph");
  auto hint = load_hint("PSL34_graph");
  std::swap(hint.images[0], hint.images[7]);
  CHECK_THROWS_AS(mu_fitting_free(graph, {hint}), InputError);
  auto small = load_hint("PSL34");
  CHECK_THROWS_AS(mu_fitting_free(graph, {small}), InputError);
}

TEST_CASE("dispatch on names alone") {
  AlmostSimpleData a;
  auto s1 = PermGroup::alternating(7);
  a.outer_order = 2;
  CHECK(dispatch_table(parse_simple_name("Alt(7)"), s1, a, nullptr).rule == "default");
  auto on = dispatch_table(parse_simple_name("ON"), s1, a, nullptr);
  CHECK(on.mu == 245520);
  CHECK(on.rule == "row 4");
  CHECK(dispatch_table(parse_simple_name("G2(3)"), s1, a, nullptr).mu == 702);
  a.outer_order = 3;
  CHECK(dispatch_table(parse_simple_name("PSU(3,5)"), s1, a, nullptr).mu == 126);
  CHECK(dispatch_table(parse_simple_name("POmegaPlus(8,2)"), s1, a, nullptr).mu == 360);
  CHECK(dispatch_table(parse_simple_name("POmegaPlus(8,3)"), s1, a, nullptr).mu == 3240);
  CHECK(dispatch_table(parse_simple_name("POmegaPlus(8,4)"), s1, a, nullptr).rule == "row 10");
  a.outer_order = 24;
  CHECK(dispatch_table(parse_simple_name("POmegaPlus(8,3)"), s1, a, nullptr).mu == 3360);
  a.outer_order = 2;
  CHECK_THROWS_AS(dispatch_table(parse_simple_name("POmegaPlus(8,3)"), s1, a, nullptr), Unsupported);
  CHECK_THROWS_AS(dispatch_table(parse_simple_name("PSL(3,4)"), s1, a, nullptr), HintRequired);
  CHECK_THROWS_AS(dispatch_table(parse_simple_name("PSp(4,4)"), s1, a, nullptr), HintRequired);
  CHECK_THROWS_AS(dispatch_table(parse_simple_name("POmegaPlus(10,3)"), s1, a, nullptr), HintRequired);
  CHECK_THROWS_AS(dispatch_table(parse_simple_name("G2(9)"), s1, a, nullptr), Unsupported);
  CHECK_THROWS_AS(dispatch_table(parse_simple_name("PSp(4,3)"), s1, a, nullptr), Unsupported);
  a.outer_order = 1;
  CHECK(dispatch_table(parse_simple_name("PSL(3,4)"), s1, a, nullptr).mu == 21);
}

TEST_CASE("small quotients") {
  auto s4 = load_fixture("S4");
  auto v4 = PermGroup(4, {parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)});
  CHECK(mu_small_quotient(QuotientGroup(s4, v4), 100) == 3);
  CHECK(mu_small_quotient(QuotientGroup(s4, s4), 100) == 0);
  auto s5 = PermGroup::symmetric(5);
  CHECK(mu_small_quotient(QuotientGroup(s5, PermGroup::trivial(5)), 200) == 5);
  CHECK_THROWS_AS(mu_small_quotient(QuotientGroup(s5, PermGroup::trivial(5)), 100), ResourceError);
}

TEST_CASE("non Fitting-free input") {
  CHECK_THROWS_AS(mu_fitting_free(load_fixture("S4")), NotFittingFree);
  CHECK_THROWS_AS(mu_fitting_free(load_fixture("D8")), NotFittingFree);
}
