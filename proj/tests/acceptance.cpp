// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fdeg/aut_lift.hpp"
#include "fdeg/error.hpp"
#include "fdeg/group_file.hpp"
#include "fdeg/hint.hpp"
#include "fdeg/mu_pipeline.hpp"
#include "fdeg/oracle.hpp"
#include "fdeg/simple_id.hpp"
#include "fdeg/socle.hpp"

using namespace fdeg;

namespace {

// Collects failures of one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string fixture(const std::string& name) { return std::string(FDEG_FIXTURE_DIR) + "/" + name; }

PermGroup load(const std::string& name) { return group_from_file(read_group_file(fixture(name + ".grp"))); }

std::string str(const BigInt& x) { return x.str(); }

template <class T>
std::string str(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::size_t ipow(std::size_t p, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= p;
  return r;
}

// Every abelian group of order n, as lists of prime-power cyclic orders.
std::vector<std::vector<std::size_t>> abelian_groups(std::size_t n) {
  std::vector<std::vector<std::size_t>> result{{}};
  for (std::size_t p = 2; n > 1; ++p) {
    std::size_t k = 0;
    while (n % p == 0) n /= p, ++k;
    if (k == 0) continue;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(k, k, cur, parts);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : result)
      for (const auto& part : parts) {
        auto g = base;
        for (auto a : part) g.push_back(ipow(p, a));
        next.push_back(g);
      }
    result = std::move(next);
  }
  return result;
}

void criterion1(Check& c) {
  std::size_t groups = 0;
  for (std::size_t n = 1; n <= 200; ++n)
    for (const auto& orders : abelian_groups(n)) {
      std::size_t expected = 0;
      for (auto q : orders) expected += q;
      auto r = mu_oracle(CayleyGroup::abelian(orders.empty() ? std::vector<std::size_t>{1} : orders), 100000);
      ++groups;
      if (r.mu != expected) {
        std::string name;
        for (auto q : orders) name += "Z" + str(q) + " ";
        c.expect(false, name + "gave " + str(r.mu) + ", expected " + str(expected));
      }
    }
  // number of abelian groups of order at most 200, summed from products of partition counts
  c.expect(groups == 389, "expected 389 abelian groups, got " + str(groups));
}

std::uint64_t pipeline_mu(const PermGroup& g, const std::vector<RecognitionHint>& hints = {}) {
  return *mu_fitting_free(g, hints).total;
}

void criterion2(Check& c) {
  const std::pair<const char*, std::uint64_t> cases[] = {
      {"PSL27", 7}, {"PGL27", 8}, {"A6", 6}, {"AutA6", 10}, {"M12_2", 24}};
  for (const auto& [name, mu] : cases) {
    auto got = pipeline_mu(load(name));
    c.expect(got == mu, std::string(name) + " gave " + str(got));
  }
  auto autA6 = load("AutA6");
  c.expect(autA6.order() == 1440, "AutA6 fixture has the wrong order");
  c.expect(load("M12_2").order() == 190080, "M12_2 fixture has the wrong order");
  auto oracle = mu_oracle(list_elements(autA6, 2000), 5000).mu;
  c.expect(oracle == 10, "oracle on AutA6 gave " + str(oracle));
}

void criterion3(Check& c) {
  const std::pair<const char*, std::uint64_t> cases[] = {
      {"PSL(3,4)", 21}, {"PSp(4,4)", 85}, {"POmegaPlus(8,2)", 120}};
  for (const auto& [name, mu] : cases) {
    auto got = mu_simple(parse_simple_name(name));
    c.expect(got == mu, std::string(name) + " gave " + str(got));
  }
}

void criterion4(Check& c) {
  for (const char* name : {"A5", "S5", "A6", "S6", "PSL27", "PGL27", "PSL28", "PGammaL28", "PSL211"}) {
    auto g = load(name);
    auto a = pipeline_mu(g);
    auto b = mu_oracle(list_elements(g, 2000), 5000).mu;
    c.expect(a == b, std::string(name) + ": pipeline " + str(a) + ", oracle " + str(b));
  }
}

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

void criterion5(Check& c) {
  for (const char* name : {"A5", "S5", "A6", "S6", "PSL27", "PGL27", "PSL28", "PGammaL28", "PSL211", "AutA6",
                           "A5wrZ2", "A5xA5", "S7"}) {
    auto g = load(name);
    c.expect(g.order() <= 10000, std::string(name) + " is larger than expected");
    auto d = socle_fitting_free(g);
    c.expect(d.socle.same_group(brute_force_socle(g)), std::string(name) + ": socle differs from brute force");
    c.expect(d.fitting_free_certificate, std::string(name) + ": no certificate");
  }
  for (const char* name : {"S4", "D8", "Z6"}) {
    bool rejected = false;
    try {
      socle_fitting_free(load(name));
    } catch (const NotFittingFree&) {
      rejected = true;
    }
    c.expect(rejected, std::string(name) + " was not rejected");
  }
}

Matrix random_element(const FamilyParams& fam, std::mt19937_64& rng) {
  auto gens = standard_generators(fam);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Matrix x = Matrix::identity(fam.field, fam.dimension());
  for (int i = 0; i < 60; ++i) x = x * gens[pick(rng)];
  return x;
}

// Projective images with random central representatives.
ProjectiveAut scramble(const MatrixAut& a, std::mt19937_64& rng) {
  auto z = center_elements(a.family);
  std::uniform_int_distribution<std::size_t> pick(0, z.size() - 1);
  ProjectiveAut out = project(a);
  for (auto& m : out.images) m = m * z[pick(rng)];
  return out;
}

void criterion6(Check& c) {
  auto fam = make_family(MatrixFamily::SL, 3, 2, 2);
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 20; ++t) {
    auto u0 = random_element(fam, rng);
    auto lambda = scramble(inner_aut(fam, u0), rng);
    for (const auto& v : lambda.images)
      c.expect(order_p_in_coset(fam, v).size() == 1, "coset without a unique involution in trial " + str(t));
    auto alpha = lift_psl_aut(lambda);
    for (std::size_t k = 0; k < alpha.images.size(); ++k)
      c.expect(projectively_equal(fam, alpha.images[k], lambda.images[k]), "lift differs on L in trial " + str(t));
    c.expect(alpha.images == inner_aut(fam, u0).images, "lift is not conjugation in trial " + str(t));
    c.expect(classify_aut(alpha).t_doubleprime == 0, "inner automorphism classified as graph in trial " + str(t));
  }
  MatrixAut ti{fam, {}};
  for (const auto& u : standard_generators(fam)) ti.images.push_back(u.transpose().inverse());
  c.expect(classify_aut(ti).t_doubleprime == 1, "transpose-inverse not classified as graph");
  auto g = load("PSL34_graph");
  c.expect(g.degree() == 42, "PSL34_graph fixture has the wrong degree");
  auto mu = pipeline_mu(g, {read_hint_file(fixture("PSL34_graph.hint.json"))});
  c.expect(mu == 42, "PSL34_graph gave " + str(mu));
  c.expect(pipeline_mu(load("PSL34"), {read_hint_file(fixture("PSL34.hint.json"))}) == 21, "PSL34 did not give 21");
}

void criterion7(Check& c) {
  std::mt19937_64 rng(7);
  for (auto fam : {make_family(MatrixFamily::SL, 3, 3, 1), make_family(MatrixFamily::SL, 3, 2, 2),
                   make_family(MatrixFamily::Sp4, 2, 2, 2), make_family(MatrixFamily::OmegaPlus, 4, 3, 1)}) {
    auto name = family_name(fam.family);
    auto gens = standard_generators(fam);
    auto basis = commutation_nullspace(gens, gens);
    c.expect(basis.size() == 1, name + ": nullspace dimension " + str(basis.size()));
    for (int t = 0; t < 3; ++t) {
      auto images = inner_aut(fam, random_element(fam, rng)).images;
      for (const auto& f : commutation_nullspace(gens, images))
        c.expect(f.determinant() != 0, name + ": singular solution");
      auto f = solve_commutation(gens, images);
      c.expect(f && f->determinant() != 0, name + ": solver failed");
    }
  }
}

void criterion8(Check& c) {
  auto fam = make_family(MatrixFamily::OmegaPlus, 4, 3, 1);
  auto x = form_matrix(fam);
  std::mt19937_64 rng(83);
  for (int t = 0; t < 10; ++t) {
    auto u0 = random_element(fam, rng);
    auto alpha = lift_omega_aut(scramble(inner_aut(fam, u0), rng));
    auto f = solve_commutation(standard_generators(fam), alpha.images);
    if (!f) {
      c.expect(false, "no intertwiner in trial " + str(t));
      continue;
    }
    auto s = proportional(*f * x * f->transpose(), x);
    c.expect(s.has_value(), "F X F^t not proportional to X in trial " + str(t));
    // over GF(3) the only square is 1, so a scalar multiple of F preserves X exactly
    c.expect(s && *s == FE{1}, "form scalar is not 1 in trial " + str(t));
    c.expect(classify_aut(alpha).in_gamma, "not in Gamma in trial " + str(t));
  }
}

std::string all_certificates() {
  std::string out;
  PipelineOptions opt;
  opt.descent.seed = 11;
  for (const char* name : {"A5", "S6", "PGL27", "PGammaL28", "AutA6", "A5wrZ2", "A5xA6", "S7", "M12", "M12_2",
                           "PSL34", "PSL34_graph"}) {
    auto g = load(name);
    out += mu_certificate(g, {}, opt).to_json();
    auto d = socle_fitting_free(g, opt.descent);
    for (const auto& f : d.factors)
      for (const auto& gen : f.generators()) out += gen.to_cycles() + "\n";
  }
  return out;
}

void criterion9(Check& c) {
  auto a = all_certificates();
  auto b = all_certificates();
  c.expect(a == b, "certificates differ between runs");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"abelian groups of order <= 200 follow the prime-power sum", criterion1},
      {"PSL(2,7)=7, PGL(2,7)=8, A6=6, Aut(A6)=10, M12.2=24", criterion2},
      {"mu of PSL(3,4)=21, PSp(4,4)=85, POmega+(8,2)=120", criterion3},
      {"pipeline agrees with the oracle on fixtures of order <= 2000", criterion4},
      {"socle agrees with brute force, S4 and D8 rejected", criterion5},
      {"PSL(3,4) lifting, classification and the degree-42 fixture", criterion6},
      {"commutation nullspaces are one-dimensional and solutions invertible", criterion7},
      {"Omega+(8,3) intertwiners preserve the form", criterion8},
      {"certificates are deterministic", criterion9},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [title, run] : criteria) {
    ++index;
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s (%.2fs)\n", index, c.failures.empty() ? "PASS" : "FAIL", title, secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    if (!c.failures.empty()) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
