#include "doctest.h"
#include "fdeg/classical.hpp"
#include "fdeg/error.hpp"
#include "fdeg/perm_group.hpp"

#include <random>

using namespace fdeg;

namespace {
PermGroup vector_group(const std::vector<Matrix>& gens) {
  std::vector<Permutation> perms;
  for (const auto& m : gens) perms.push_back(act_on_vectors(m));
  return PermGroup(perms.front().degree(), perms);
}

Matrix random_word(const std::vector<Matrix>& gens, std::mt19937_64& rng, int length = 30) {
  Matrix x = Matrix::identity(gens[0].field_ptr(), gens[0].rows());
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int i = 0; i < length; ++i) x = x * gens[pick(rng)];
  return x;
}
}  // namespace

TEST_CASE("field construction and moduli") {
  CHECK(make_field(2, 1)->q() == 2);
  CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(make_field(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK_THROWS_AS(make_field(4, 1), InputError);
  CHECK_THROWS_AS(make_field(2, 17), InputError);
}

TEST_CASE("field axioms") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {2, 3}, {3, 2}, {7, 2}, {2, 9}}) {
    auto f = make_field(p, e);
    std::mt19937_64 rng(p * 100 + e);
    std::uniform_int_distribution<FE> pick(0, f->q() - 1);
    for (int t = 0; t < 300; ++t) {
      FE a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      // Frobenius is additive and multiplicative
      CHECK(f->frobenius(f->add(a, b), 1) == f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
      CHECK(f->frobenius(f->mul(a, b), 1) == f->mul(f->frobenius(a, 1), f->frobenius(b, 1)));
      CHECK(f->frobenius(a, e) == a);
    }
    CHECK(f->pow(f->primitive(), f->q() - 1) == 1);
  }
  auto f4 = make_field(2, 2);
  FE g = f4->primitive();
  CHECK(f4->frobenius(g, 1) == f4->mul(g, g));
  auto f2 = make_field(2, 1);
  CHECK(f2->frobenius(1, 3) == 1);
  CHECK_THROWS_AS(f4->inv(0), InputError);
  CHECK(f4->from_coefficients(f4->coefficients(3)) == 3);
}

TEST_CASE("matrix arithmetic") {
  auto f3 = make_field(3, 1);
  CHECK(Matrix::identity(f3, 4).determinant() == 1);
  Matrix s(f3, 2, 2, {1, 1, 2, 2});
  CHECK(s.determinant() == 0);
  CHECK_THROWS_AS(s.inverse(), InputError);
  auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<FE>{2, 1});  // proportional to (1,2)
  CHECK(nullspace(Matrix::identity(f3, 3)).empty());
  CHECK(nullspace(Matrix(f3, 2, 2)).size() == 2);
  auto params = make_family(MatrixFamily::SL, 3, 3, 1);
  std::mt19937_64 rng(1);
  auto gens = standard_generators(params);
  for (int t = 0; t < 20; ++t) {
    auto x = random_word(gens, rng);
    CHECK(x.determinant() == 1);
    CHECK((x * x.inverse()).is_identity());
    CHECK((x.transpose()).transpose() == x);
  }
}

TEST_CASE("standard generating sets") {
  auto sl22 = make_family(MatrixFamily::SL, 2, 2, 1);
  CHECK(standard_generators(sl22).size() == 2);
  auto sl34 = make_family(MatrixFamily::SL, 3, 2, 2);
  auto l = standard_generators(sl34);
  CHECK(l.size() == 3 * 3 * 2);
  for (const auto& u : l) {
    CHECK(u.determinant() == 1);
    CHECK(u.order() == 2);
  }
  auto om = make_family(MatrixFamily::OmegaPlus, 4, 3, 1);
  auto x = form_matrix(om);
  for (const auto& u : standard_generators(om)) {
    CHECK((u * u * u).is_identity());
    CHECK(u.transpose() * x * u == x);
    CHECK(in_family(om, u));
  }
  auto sp = make_family(MatrixFamily::Sp4, 2, 2, 2);
  auto xs = form_matrix(sp);
  for (const auto& u : standard_generators(sp)) {
    CHECK(u.order() == 2);
    CHECK(u.transpose() * xs * u == xs);
  }
  CHECK_THROWS_AS(make_family(MatrixFamily::Sp4, 2, 3, 1), InputError);
  CHECK_THROWS_AS(make_family(MatrixFamily::OmegaPlus, 3, 3, 1), InputError);
  CHECK_THROWS_AS(form_matrix(sl34), InputError);
}

TEST_CASE("generated groups have the classical orders") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto params = q == 4 ? make_family(MatrixFamily::SL, 2, 2, 2) : make_family(MatrixFamily::SL, 2, q, 1);
    CHECK(vector_group(standard_generators(params)).order() == q * (q * q - 1));
  }
  CHECK(vector_group(standard_generators(make_family(MatrixFamily::SL, 3, 3, 1))).order() == 5616);
  CHECK(vector_group(standard_generators(make_family(MatrixFamily::SL, 3, 2, 2))).order() == 60480);
  CHECK(vector_group(standard_generators(make_family(MatrixFamily::Sp4, 2, 2, 2))).order() == 979200);
}

TEST_CASE("vector and point actions") {
  auto params = make_family(MatrixFamily::SL, 3, 2, 2);
  auto gens = standard_generators(params);
  std::mt19937_64 rng(9);
  auto a = random_word(gens, rng), b = random_word(gens, rng);
  CHECK(act_on_vectors(a * b) == act_on_vectors(a) * act_on_vectors(b));
  CHECK(act_on_points(a * b) == act_on_points(a) * act_on_points(b));
  CHECK(act_on_points(a).degree() == 21);
  CHECK(matrix_from_vector_action(params.field, 3, act_on_vectors(a)) == a);
}

TEST_CASE("graph maps are automorphisms") {
  for (auto params : {make_family(MatrixFamily::SL, 3, 3, 1), make_family(MatrixFamily::Sp4, 2, 2, 2)}) {
    auto gens = standard_generators(params);
    auto g = graph_permutation(params);
    std::vector<Permutation> src, img;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      src.push_back(act_on_vectors(gens[k]));
      img.push_back(act_on_vectors(gens[g[k]]));
    }
    PermGroup grp(src[0].degree(), src);
    Homomorphism phi(grp, grp, img);
    CHECK(phi.graph_order() == grp.order());
    std::swap(img[0], img[1]);
    CHECK(Homomorphism(grp, grp, img).graph_order() > grp.order());
  }
}

TEST_CASE("commutation solver") {
  std::mt19937_64 rng(4);
  for (auto params : {make_family(MatrixFamily::SL, 3, 3, 1), make_family(MatrixFamily::SL, 3, 2, 2),
                      make_family(MatrixFamily::Sp4, 2, 2, 2), make_family(MatrixFamily::OmegaPlus, 4, 3, 1)}) {
    auto gens = standard_generators(params);
    auto basis = commutation_nullspace(gens, gens);
    CHECK(basis.size() == 1);
    CHECK(basis[0].is_scalar());
    auto f = solve_commutation(gens, gens);
    REQUIRE(f);
    CHECK(f->determinant() != 0);
  }
  auto params = make_family(MatrixFamily::SL, 3, 3, 1);
  auto gens = standard_generators(params);
  Matrix f0(params.field, 3, 3, {1, 2, 0, 0, 1, 1, 1, 0, 2});
  REQUIRE(f0.determinant() != 0);
  std::vector<Matrix> images;
  for (const auto& u : gens) images.push_back(f0 * u * f0.inverse());
  auto f = solve_commutation(gens, images);
  REQUIRE(f);
  CHECK(proportional(*f, f0).has_value());
  std::vector<Matrix> graph;
  for (const auto& u : gens) graph.push_back(u.transpose().inverse());
  CHECK_FALSE(solve_commutation(gens, graph).has_value());
  CHECK_THROWS_AS(commutation_nullspace(gens, {}), InputError);
}

TEST_CASE("matrices recovered from point actions") {
  std::mt19937_64 rng(21);
  for (auto params : {make_family(MatrixFamily::SL, 3, 2, 2), make_family(MatrixFamily::Sp4, 2, 2, 2)}) {
    auto gens = standard_generators(params);
    for (int t = 0; t < 5; ++t) {
      auto a = random_word(gens, rng);
      auto m = matrix_from_point_action(params.field, a.rows(), act_on_points(a));
      CHECK(proportional(m, a).has_value());
    }
  }
  auto f = make_field(2, 2);
  auto swap = parse_permutation("(1 2)", 21);
  CHECK_THROWS_AS(matrix_from_point_action(f, 3, swap), InputError);
}
