#include <random>

#include "doctest.h"
#include "fdeg/aut_lift.hpp"
#include "fdeg/error.hpp"

using namespace fdeg;

namespace {

Matrix random_element(const FamilyParams& fam, std::mt19937_64& rng) {
  auto gens = standard_generators(fam);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Matrix x = Matrix::identity(fam.field, fam.dimension());
  for (int i = 0; i < 40; ++i) x = x * gens[pick(rng)];
  return x;
}

// Multiplies each image by a random central element, so the lift has work to do.
ProjectiveAut scramble(const MatrixAut& a, std::mt19937_64& rng) {
  auto z = center_elements(a.family);
  std::uniform_int_distribution<std::size_t> pick(0, z.size() - 1);
  ProjectiveAut out = project(a);
  for (auto& m : out.images) m = m * z[pick(rng)];
  return out;
}

}  // namespace

TEST_CASE("centers of the matrix groups") {
  CHECK(center_elements(make_family(MatrixFamily::SL, 3, 2, 2)).size() == 3);
  CHECK(center_elements(make_family(MatrixFamily::SL, 3, 3, 1)).size() == 1);
  CHECK(center_elements(make_family(MatrixFamily::SL, 4, 3, 1)).size() == 2);
  CHECK(center_elements(make_family(MatrixFamily::Sp4, 2, 2, 2)).size() == 1);
  CHECK(center_elements(make_family(MatrixFamily::OmegaPlus, 4, 3, 1)).size() == 2);
  CHECK(center_elements(make_family(MatrixFamily::OmegaPlus, 5, 3, 1)).size() == 1);
}

TEST_CASE("lifting inner automorphisms of PSL(3,4)") {
  auto fam = make_family(MatrixFamily::SL, 3, 2, 2);
  std::mt19937_64 rng(34);
  auto id = lift_psl_aut(project(inner_aut(fam, Matrix::identity(fam.field, 3))));
  CHECK(id.images == standard_generators(fam));
  for (int t = 0; t < 10; ++t) {
    auto u0 = random_element(fam, rng);
    auto lambda = scramble(inner_aut(fam, u0), rng);
    for (const auto& v : lambda.images) CHECK(order_p_in_coset(fam, v).size() == 1);
    auto alpha = lift_psl_aut(lambda);
    CHECK(alpha.images == inner_aut(fam, u0).images);
    for (std::size_t k = 0; k < alpha.images.size(); ++k)
      CHECK(projectively_equal(fam, alpha.images[k], lambda.images[k]));
    auto check = is_inner_or_diagonal(alpha);
    REQUIRE(check.f);
    CHECK(proportional(*check.f, u0).has_value());
  }
}

TEST_CASE("lifting respects composition") {
  auto fam = make_family(MatrixFamily::SL, 3, 2, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    auto u1 = random_element(fam, rng), u2 = random_element(fam, rng);
    auto both = lift_psl_aut(scramble(inner_aut(fam, u1 * u2), rng));
    auto first = lift_psl_aut(scramble(inner_aut(fam, u1), rng));
    auto second = lift_psl_aut(scramble(inner_aut(fam, u2), rng));
    auto gens = standard_generators(fam);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      // lift(l1)(lift(l2)(U)) computed through the conjugating matrices
      CHECK(both.images[k] == u1 * second.images[k] * u1.inverse());
      CHECK(first.images[k] == u1 * gens[k] * u1.inverse());
    }
  }
}

TEST_CASE("lifting inner automorphisms of Omega+(8,3)") {
  auto fam = make_family(MatrixFamily::OmegaPlus, 4, 3, 1);
  std::mt19937_64 rng(83);
  auto x = form_matrix(fam);
  for (int t = 0; t < 3; ++t) {
    auto u0 = random_element(fam, rng);
    auto alpha = lift_omega_aut(scramble(inner_aut(fam, u0), rng));
    CHECK(alpha.images == inner_aut(fam, u0).images);
    auto c = classify_aut(alpha);
    CHECK(c.in_gamma);
    REQUIRE(c.witness_f);
    CHECK(proportional(*c.witness_f, u0).has_value());
    CHECK(c.form_scalar == FE{1});
  }
  // a similitude with multiplier 2 normalizes Omega but is not in PO
  std::vector<FE> diag(64, 0);
  for (int i = 0; i < 8; ++i) diag[i * 9] = i < 4 ? 2 : 1;
  Matrix sim(fam.field, 8, 8, diag);
  CHECK(sim * x * sim.transpose() == x.scaled(2));
  auto alpha = lift_omega_aut(project(inner_aut(fam, sim)));
  for (const auto& m : alpha.images) CHECK(in_family(fam, m));
  auto c = classify_aut(alpha);
  CHECK_FALSE(c.in_gamma);
  CHECK(c.form_scalar == FE{2});
}

TEST_CASE("inner or diagonal test") {
  auto sl33 = make_family(MatrixFamily::SL, 3, 3, 1);
  auto id = is_inner_or_diagonal(inner_aut(sl33, Matrix::identity(sl33.field, 3)));
  REQUIRE(id.f);
  CHECK(id.f->is_scalar());
  MatrixAut ti{sl33, {}};
  for (const auto& u : standard_generators(sl33)) ti.images.push_back(u.transpose().inverse());
  auto graph = is_inner_or_diagonal(ti);
  CHECK_FALSE(graph.inner_or_diagonal);
  CHECK_FALSE(graph.f);
}

TEST_CASE("classification of automorphism types") {
  auto sl34 = make_family(MatrixFamily::SL, 3, 2, 2);
  auto fr = classify_aut(frobenius_aut(sl34, 1));
  CHECK(fr.t_prime == 1);
  CHECK(fr.t_doubleprime == 0);
  CHECK(fr.in_gamma);
  auto inner = classify_aut(inner_aut(sl34, standard_generators(sl34)[3]));
  CHECK(inner.t_prime == 2);
  CHECK(inner.t_doubleprime == 0);
  auto g34 = classify_aut(graph_aut(sl34));
  CHECK(g34.t_doubleprime == 1);

  auto sl33 = make_family(MatrixFamily::SL, 3, 3, 1);
  MatrixAut ti{sl33, {}};
  for (const auto& u : standard_generators(sl33)) ti.images.push_back(u.transpose().inverse());
  CHECK(classify_aut(ti).t_doubleprime == 1);

  // conjugation by diag(w, 1, 1), determinant w: a diagonal automorphism
  Matrix d = Matrix::identity(sl34.field, 3);
  d.at(0, 0) = sl34.field->primitive();
  auto diag = classify_aut(inner_aut(sl34, d));
  CHECK(diag.t_doubleprime == 0);
  CHECK(subgroup_in_gamma({inner_aut(sl34, d), frobenius_aut(sl34, 1)}));
  CHECK_FALSE(subgroup_in_gamma({inner_aut(sl34, d), graph_aut(sl34)}));

  auto sp = make_family(MatrixFamily::Sp4, 2, 2, 2);
  CHECK(classify_aut(graph_aut(sp)).t_doubleprime == 1);
  CHECK(classify_aut(frobenius_aut(sp, 1)).t_prime == 1);
  auto spi = classify_aut(inner_aut(sp, standard_generators(sp)[0]));
  CHECK(spi.t_doubleprime == 0);
  CHECK(spi.t_prime == 2);
}

TEST_CASE("lifting rejects bad input") {
  auto sl32 = make_family(MatrixFamily::SL, 3, 2, 1);
  CHECK_THROWS_AS(lift_psl_aut(project(inner_aut(sl32, Matrix::identity(sl32.field, 3)))), InputError);
  auto sl34 = make_family(MatrixFamily::SL, 3, 2, 2);
  auto bad = project(inner_aut(sl34, Matrix::identity(sl34.field, 3)));
  Matrix d = Matrix::identity(sl34.field, 3);
  d.at(0, 0) = sl34.field->primitive();
  d.at(1, 1) = sl34.field->inv(sl34.field->primitive());
  bad.images[0] = d;  // order 3, no element of order 2 in its coset
  CHECK_THROWS_AS(lift_psl_aut(bad), InputError);
  bad.images.pop_back();
  CHECK_THROWS_AS(lift_psl_aut(bad), InputError);
}
