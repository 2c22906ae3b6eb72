#include <unordered_set>

#include "doctest.h"
#include "fdeg/error.hpp"
#include "fdeg/socle.hpp"
#include "fixtures.hpp"

using namespace fdeg;

namespace {

// Socle as the join of the minimal members among all normal closures of single elements.
PermGroup brute_force_socle(const PermGroup& g) {
  std::vector<PermGroup> closures;
  for (const auto& x : g.elements()) {
    if (x.is_identity()) continue;
    auto n = normal_closure(g, {x});
    bool known = false;
    for (const auto& m : closures) known = known || m.same_group(n);
    if (!known) closures.push_back(n);
  }
  std::vector<PermGroup> minimal;
  for (const auto& n : closures) {
    bool is_min = true;
    for (const auto& m : closures)
      if (m.order() < n.order() && m.is_subgroup_of(n)) is_min = false;
    if (is_min) minimal.push_back(n);
  }
  return join(g.degree(), minimal);
}

void check_decomposition(const PermGroup& g, const SocleDecomposition& d) {
  BigInt product = 1;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    product *= d.factors[i].order();
    for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
      for (const auto& a : d.factors[i].generators())
        for (const auto& b : d.factors[j].generators()) CHECK(commute(a, b));
      CHECK(intersect_with_normal(d.factors[i], d.factors[j]).is_trivial());
    }
  }
  CHECK(product == d.socle.order());
  CHECK(normalizes(g, d.socle));
  CHECK(centralizer_of_normal(g, d.socle).is_trivial());
}

}  // namespace

TEST_CASE("minimal normal subgroups by descent") {
  auto s5 = PermGroup::symmetric(5);
  CHECK(minimal_normal_under(s5, s5).group.same_group(PermGroup::alternating(5)));
  auto wr = load_fixture("A5wrZ2");
  auto base = load_fixture("A5xA5");
  auto n = minimal_normal_under(wr, base);
  CHECK(n.group.order() == 3600);
  CHECK_FALSE(n.probabilistic);
  auto prod = load_fixture("A5xA6");
  auto m = minimal_normal_under(prod, prod).group;
  CHECK((m.order() == 60 || m.order() == 360));
  CHECK_THROWS_AS(minimal_normal_under(s5, PermGroup::trivial(5)), InputError);
}

TEST_CASE("socle matches brute force on small fixtures") {
  for (const char* name : {"A5", "S5", "A6", "S6", "PSL27", "PGL27", "PSL28", "PGammaL28", "PSL211", "AutA6",
                           "A5wrZ2", "A5xA5", "S7"}) {
    CAPTURE(name);
    auto g = load_fixture(name);
    auto d = socle_fitting_free(g);
    CHECK(d.fitting_free_certificate);
    CHECK(d.socle.same_group(brute_force_socle(g)));
    check_decomposition(g, d);
    // Soc(N) = Soc(G) meet N for each minimal normal N
    for (const auto& orbit : d.minimal_normals) {
      std::vector<PermGroup> parts;
      for (auto i : orbit) parts.push_back(d.factors[i]);
      auto n = join(g.degree(), parts);
      CHECK(intersect_with_normal(n, d.socle).same_group(n));
    }
  }
}

TEST_CASE("socle of larger fixtures") {
  auto pgl = load_fixture("PGL27");
  auto d = socle_fitting_free(pgl);
  REQUIRE(d.factors.size() == 1);
  CHECK(d.socle.order() == 168);
  auto prod = socle_fitting_free(load_fixture("A5xA6"));
  CHECK(prod.factors.size() == 2);
  CHECK(prod.minimal_normals.size() == 2);
  auto psl34 = load_fixture("PSL34_graph");
  auto e = socle_fitting_free(psl34);
  CHECK(e.socle.order() == 20160);
  CHECK(e.probabilistic_minimality);
  check_decomposition(psl34, e);
  auto m12 = socle_fitting_free(load_fixture("M12_2"));
  CHECK(m12.socle.order() == 95040);
}

TEST_CASE("groups with abelian normal subgroups are rejected") {
  CHECK_THROWS_AS(socle_fitting_free(load_fixture("S4")), NotFittingFree);
  CHECK_THROWS_AS(socle_fitting_free(load_fixture("D8")), NotFittingFree);
  CHECK_THROWS_AS(socle_fitting_free(load_fixture("Z6")), NotFittingFree);
  CHECK_THROWS_AS(socle_fitting_free(PermGroup::trivial(3)), InputError);
}

TEST_CASE("simple factors and their orbits") {
  CHECK(simple_factors(PermGroup::alternating(5)).size() == 1);
  auto base = load_fixture("A5xA5");
  auto f = simple_factors(base);
  REQUIRE(f.size() == 2);
  CHECK(f[0].order() == 60);
  CHECK(f[1].order() == 60);
  auto wr = load_fixture("A5wrZ2");
  auto orbits = minimal_normal_subgroups(wr, f);
  CHECK(orbits == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(minimal_normal_subgroups(base, f).size() == 2);
  auto a5 = PermGroup::alternating(5);
  CHECK(minimal_normal_subgroups(a5, {a5}).size() == 1);
}

TEST_CASE("normalizers of factors") {
  auto a5 = PermGroup::alternating(5);
  CHECK(normalizer_of_factor(a5, a5, {a5}).same_group(a5));
  auto wr = load_fixture("A5wrZ2");
  auto f = simple_factors(load_fixture("A5xA5"));
  auto nf = normalizer_of_factor(wr, f[0], f);
  CHECK(nf.order() == 3600);
  auto prod = load_fixture("A5xA6");
  auto pf = simple_factors(prod);
  CHECK(normalizer_of_factor(prod, pf[0], pf).same_group(prod));
  CHECK_THROWS_AS(normalizer_of_factor(wr, a5, f), InputError);
}
