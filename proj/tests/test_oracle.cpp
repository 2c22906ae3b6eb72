#include "doctest.h"
#include "fdeg/error.hpp"
#include "fdeg/oracle.hpp"

using namespace fdeg;

namespace {
Permutation P(const char* s, std::size_t n) { return parse_permutation(s, n); }

ElementSet subgroup_of(const CayleyGroup& c, const std::vector<Permutation>& gens) {
  std::vector<Elem> idx;
  for (const auto& g : gens) {
    for (Elem x = 0; x < c.order(); ++x) {
      if (c.labels()[x] == g) idx.push_back(x);
    }
  }
  return c.subgroup_generated(idx);
}
}  // namespace

TEST_CASE("cores") {
  auto s4 = list_elements(PermGroup::symmetric(4), 100);
  auto d8 = subgroup_of(s4, {P("(1 2 3 4)", 4), P("(1 3)", 4)});
  CHECK(d8.count() == 8);
  auto k = core(s4, d8);
  CHECK(k.count() == 4);
  CHECK(k == subgroup_of(s4, {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)}));
  CHECK(core(s4, s4.whole()) == s4.whole());
  CHECK(core(s4, subgroup_of(s4, {P("(1 2)", 4), P("(1 2 3)", 4)})).count() == 1);
  ElementSet bad(24);
  bad.set(0);
  bad.set(5);
  if (s4.element_order(5) > 2) CHECK_THROWS_AS(core(s4, bad), InputError);
}

TEST_CASE("faithful collections") {
  auto s4 = list_elements(PermGroup::symmetric(4), 100);
  CHECK(is_faithful_collection(s4, {s4.trivial()}));
  CHECK_FALSE(is_faithful_collection(s4, {s4.whole()}));
  auto one = CayleyGroup::abelian({1});
  CHECK(is_faithful_collection(one, {one.whole()}));
  std::vector<ElementSet> stabs;
  const char* gens[4][2] = {{"(2 3)", "(2 3 4)"}, {"(1 3)", "(1 3 4)"}, {"(1 2)", "(1 2 4)"}, {"(1 2)", "(1 2 3)"}};
  for (auto& g : gens) stabs.push_back(subgroup_of(s4, {P(g[0], 4), P(g[1], 4)}));
  CHECK(is_faithful_collection(s4, stabs));
}

TEST_CASE("oracle values") {
  CHECK(mu_oracle(CayleyGroup::abelian({6})).mu == 5);
  CHECK(mu_oracle(CayleyGroup::abelian({2, 2})).mu == 4);
  CHECK(mu_oracle(CayleyGroup::abelian({1})).mu == 0);
  auto q8 = list_elements(PermGroup(8, {P("(1 2 3 4)(5 6 7 8)", 8), P("(1 5 3 7)(2 8 4 6)", 8)}), 100);
  CHECK(mu_oracle(q8).mu == 8);
  auto s4 = list_elements(PermGroup::symmetric(4), 100);
  auto r = mu_oracle(s4);
  CHECK(r.mu == 4);
  CHECK(is_faithful_collection(s4, r.witness.subgroups));
  CHECK(r.witness.core_intersection.count() == 1);
  std::size_t total = 0;
  for (const auto& h : r.witness.subgroups) total += 24 / h.count();
  CHECK(total == r.witness.total_degree);
  CHECK(mu_oracle(list_elements(PermGroup::alternating(5), 100)).mu == 5);
  CHECK(mu_oracle(list_elements(PermGroup::symmetric(5), 200)).mu == 5);
}

TEST_CASE("witness size and subadditivity") {
  auto s3 = list_elements(PermGroup::symmetric(3), 10);
  auto d8 = list_elements(PermGroup(4, {P("(1 2 3 4)", 4), P("(1 3)", 4)}), 100);
  // S3 x D8 on 3 + 4 points
  auto prod = list_elements(PermGroup(7, {P("(1 2 3)", 7), P("(1 2)", 7), P("(4 5 6 7)", 7), P("(4 6)", 7)}), 100);
  auto rp = mu_oracle(prod);
  CHECK(rp.mu <= mu_oracle(s3).mu + mu_oracle(d8).mu);
  CHECK(rp.mu == 7);
  CHECK(rp.witness.subgroups.size() <= 5);  // log2(48)
}
