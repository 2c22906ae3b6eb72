// Regenerates the fixture corpus: make_fixtures <output-dir>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "fdeg/cayley.hpp"
#include "fdeg/classical.hpp"
#include "fdeg/error.hpp"
#include "fdeg/group_file.hpp"
#include "fdeg/hint.hpp"

using namespace fdeg;

namespace {

std::filesystem::path out_dir;

void write(const std::string& name, std::vector<std::string> recipe, std::size_t degree,
           std::vector<Permutation> gens, const BigInt& expected, std::vector<Permutation> kernel = {},
           bool has_kernel = false) {
  PermGroup g(degree, gens);
  if (g.order() != expected)
    throw Error(name + ": order " + g.order().str() + " but expected " + expected.str());
  GroupFile f;
  f.degree = degree;
  f.generators = std::move(gens);
  f.kernel = std::move(kernel);
  f.has_kernel = has_kernel;
  f.comments = std::move(recipe);
  f.comments.push_back("order " + expected.str());
  std::ofstream(out_dir / (name + ".grp")) << format_group_file(f);
  std::cout << name << ": degree " << degree << ", order " << expected << "\n";
}

std::vector<Permutation> perms(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> out;
  for (const char* c : cycles) out.push_back(parse_permutation(c, n));
  return out;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<Point> img(a.degree() + b.degree());
  for (Point i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (Point i = 0; i < b.degree(); ++i) img[a.degree() + i] = static_cast<Point>(a.degree() + b[i]);
  return Permutation(std::move(img));
}

Permutation swap_blocks(std::size_t n) {
  std::vector<Point> img(2 * n);
  for (Point i = 0; i < n; ++i) {
    img[i] = static_cast<Point>(n + i);
    img[n + i] = i;
  }
  return Permutation(std::move(img));
}

// Entrywise Frobenius x -> x^p on the projective points of F_q^n.
Permutation frobenius_on_points(const Field& f, std::size_t n) {
  auto pts = projective_points(f, n);
  std::map<std::vector<FE>, Point> index;
  for (std::size_t k = 0; k < pts.size(); ++k) index[pts[k]] = static_cast<Point>(k);
  std::vector<Point> img(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto v = pts[k];
    for (auto& x : v) x = f.frobenius(x, 1);
    img[k] = index.at(v);
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> sl_on_points(const FamilyParams& params) {
  std::vector<Permutation> out;
  for (const auto& m : standard_generators(params)) out.push_back(act_on_points(m));
  return out;
}

Matrix diagonal(const FieldPtr& f, std::size_t n, FE a) {
  Matrix m = Matrix::identity(f, n);
  m.at(0, 0) = a;
  return m;
}

// Action of G on the right cosets of a subgroup of the given order (first class found).
std::vector<Permutation> coset_action(const PermGroup& g, std::size_t sub_order) {
  auto c = list_elements(g, 100'000);
  const ElementSet* h = nullptr;
  auto classes = subgroup_classes(c);
  for (const auto& cls : classes) {
    if (cls.subgroup_order == sub_order) {
      h = &cls.members[0];
      break;
    }
  }
  if (!h) throw Error("no subgroup of the requested order");
  auto hs = h->to_vector();
  std::vector<std::int64_t> coset(c.order(), -1);
  std::size_t count = 0;
  for (Elem x = 0; x < c.order(); ++x) {
    if (coset[x] >= 0) continue;
    for (Elem y : hs) coset[c.mul(y, x)] = static_cast<std::int64_t>(count);
    ++count;
  }
  std::vector<Elem> rep(count);
  for (Elem x = c.order(); x-- > 0;) rep[coset[x]] = x;
  std::vector<Permutation> out;
  for (const auto& gen : g.generators()) {
    auto it = std::find(c.labels().begin(), c.labels().end(), gen);
    Elem ge = static_cast<Elem>(it - c.labels().begin());
    std::vector<Point> img(count);
    for (std::size_t k = 0; k < count; ++k) img[k] = static_cast<Point>(coset[c.mul(rep[k], ge)]);
    out.emplace_back(std::move(img));
  }
  return out;
}

// c with c^-1 xs[i] c == ys[i] for all i, when one exists; xs must generate a transitive group.
std::optional<Permutation> conjugating_element(const std::vector<Permutation>& xs, const std::vector<Permutation>& ys) {
  const std::size_t n = xs[0].degree();
  for (Point t = 0; t < n; ++t) {
    std::vector<std::int64_t> img(n, -1);
    img[0] = t;
    std::vector<Point> queue{0};
    bool ok = true;
    for (std::size_t k = 0; k < queue.size() && ok; ++k) {
      Point p = queue[k];
      for (std::size_t i = 0; i < xs.size() && ok; ++i) {
        Point a = xs[i][p], b = ys[i][static_cast<Point>(img[p])];
        if (img[a] < 0) {
          img[a] = b;
          queue.push_back(a);
        } else if (img[a] != b) {
          ok = false;
        }
      }
    }
    if (!ok || queue.size() != n) continue;
    std::vector<Point> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<Point>(img[k]);
    std::vector<bool> hit(n);
    for (auto x : v) hit[x] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;
    return Permutation(std::move(v));
  }
  return std::nullopt;
}

std::vector<std::uint64_t> word_orders(const Permutation& x, const Permutation& y) {
  auto xi = x.inverse(), yi = y.inverse();
  return {element_order(x),         element_order(y),          element_order(x * y),
          element_order(x * yi),    element_order(x * x * y),  element_order(x * y * y),
          element_order(xi * yi * x * y), element_order(x * y * x * yi)};
}

Permutation random_of_order(const PermGroup& g, std::uint64_t order, std::mt19937_64& rng) {
  while (true) {
    auto z = g.random_element(rng);
    if (element_order(z) == order) return z;
  }
}

void write_hint(const std::string& name, const FamilyParams& params, std::size_t degree,
                std::vector<Permutation> gens, std::vector<Matrix> images) {
  RecognitionHint h;
  h.family = params;
  h.degree = degree;
  h.generators = std::move(gens);
  h.images = std::move(images);
  std::ofstream(out_dir / (name + ".hint.json")) << hint_to_json(h);
  std::cout << name << ".hint.json\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 1;
  }
  out_dir = argv[1];
  std::filesystem::create_directories(out_dir);
  try {
    write("A5", {"Alt(5) on 5 points"}, 5, perms(5, {"(1 2 3 4 5)", "(1 2 3)"}), 60);
    write("S5", {"Sym(5) on 5 points"}, 5, perms(5, {"(1 2 3 4 5)", "(1 2)"}), 120);
    write("A6", {"Alt(6) on 6 points"}, 6, perms(6, {"(1 2 3 4 5)", "(4 5 6)"}), 360);
    write("S6", {"Sym(6) on 6 points"}, 6, perms(6, {"(1 2 3 4 5 6)", "(1 2)"}), 720);
    write("S4", {"Sym(4) on 4 points; not Fitting-free"}, 4, perms(4, {"(1 2 3 4)", "(1 2)"}), 24);
    write("D8", {"dihedral group of order 8 on the square's vertices; not Fitting-free"}, 4,
          perms(4, {"(1 2 3 4)", "(1 3)"}), 8);
    write("Z6", {"cyclic group of order 6 as (1 2)(3 4 5)"}, 5, perms(5, {"(1 2)(3 4 5)"}), 6);
    write("S4_mod_V4", {"Sym(4) modulo its Klein four-subgroup"}, 4, perms(4, {"(1 2 3 4)", "(1 2)"}), 24,
          perms(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), true);

    {
      auto p = make_family(MatrixFamily::SL, 3, 2, 1);
      write("PSL27", {"SL(3,2) = PSL(2,7) on the 7 points of the projective plane over F_2",
                      "generators I + e_ij, points ordered as nonzero vectors of F_2^3"},
            7, sl_on_points(p), 168);
    }
    {
      auto p = make_family(MatrixFamily::SL, 2, 7, 1);
      auto gens = sl_on_points(p);
      gens.push_back(act_on_points(diagonal(p.field, 2, p.field->primitive())));
      write("PGL27", {"PGL(2,7) on the 8 points of the projective line over F_7",
                      "SL(2,7) transvections plus diag(3, 1)"},
            8, gens, 336);
    }
    {
      auto p = make_family(MatrixFamily::SL, 2, 2, 3);
      auto gens = sl_on_points(p);
      write("PSL28", {"PSL(2,8) on the 9 points of the projective line over F_8 (modulus x^3+x+1)"}, 9, gens, 504);
      gens.push_back(frobenius_on_points(*p.field, 2));
      write("PGammaL28", {"PGammaL(2,8) on 9 points: PSL(2,8) plus the Frobenius x -> x^2"}, 9, gens, 1512);
    }
    {
      auto p = make_family(MatrixFamily::SL, 2, 11, 1);
      PermGroup psl(12, sl_on_points(p));
      write("PSL211", {"PSL(2,11) on the 11 cosets of a subgroup Alt(5)",
                       "built from the projective line action by listing cosets"},
            11, coset_action(psl, 60), 660);
    }
    {
      auto p = make_family(MatrixFamily::SL, 2, 3, 2);
      auto gens = sl_on_points(p);
      gens.push_back(act_on_points(diagonal(p.field, 2, p.field->primitive())));
      gens.push_back(frobenius_on_points(*p.field, 2));
      write("AutA6", {"PGammaL(2,9) = Aut(Alt(6)) on the 10 points of the projective line over F_9",
                      "SL(2,9) transvections, a diagonal matrix and the Frobenius (modulus x^2+1)"},
            10, gens, 1440);
    }
    {
      auto p = make_family(MatrixFamily::SL, 3, 2, 2);
      auto l = standard_generators(p);
      std::vector<Permutation> on_points, on_both;
      for (const auto& u : l) {
        on_points.push_back(act_on_points(u));
        on_both.push_back(direct_sum(act_on_points(u), act_on_points(u.transpose().inverse())));
      }
      write("PSL34", {"PSL(3,4) on the 21 points of the projective plane over F_4 (modulus x^2+x+1)",
                      "generators: images of the transvections I + b e_ij"},
            21, on_points, 20160);
      write_hint("PSL34", p, 21, on_points, l);
      auto gens = on_both;
      gens.push_back(swap_blocks(21));
      write("PSL34_graph",
            {"PSL(3,4) extended by the transpose-inverse graph automorphism, on 21 points and 21 lines",
             "points 1..21 as in PSL34, line k+21 is the hyperplane orthogonal to point k",
             "last generator swaps each point with the matching line"},
            42, gens, 40320);
      write_hint("PSL34_graph", p, 42, on_both, l);
    }
    {
      auto m12 = perms(12, {"(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)", "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)"});
      write("M12", {"Mathieu group M12 on 12 points, standard three generators"}, 12, m12, 95040);

      // Outer automorphism: images of a generating pair that extend to an
      // automorphism not induced by any permutation of the 12 points.
      PermGroup g(12, m12);
      std::mt19937_64 rng(12);
      Permutation x, y;
      do {
        x = random_of_order(g, 11, rng);
        y = g.random_element(rng);
      } while (PermGroup(12, {x, y}).order() != 95040);
      PermGroup pair(12, {x, y});
      const auto target = word_orders(x, y);
      std::optional<Homomorphism> sigma;
      for (std::size_t tries = 0; !sigma; ++tries) {
        if (tries > 50'000'000) throw Error("no outer automorphism of M12 found");
        auto x2 = random_of_order(g, target[0], rng);
        auto y2 = random_of_order(g, target[1], rng);
        if (word_orders(x2, y2) != target) continue;
        Homomorphism phi(pair, g, {x2, y2});
        if (phi.graph_order() != 95040) continue;
        if (conjugating_element({x, y}, {x2, y2})) continue;
        sigma.emplace(phi);
      }
      auto sx = sigma->image(x), sy = sigma->image(y);
      auto m = conjugating_element({x, y}, {sigma->image(sx), sigma->image(sy)});
      if (!m) throw Error("square of the outer automorphism is not inner");
      std::vector<Permutation> gens{direct_sum(x, sx), direct_sum(y, sy),
                                    swap_blocks(12) * direct_sum(Permutation::identity(12), *m)};
      write("M12_2", {"Aut(M12) = M12.2 on 24 points: M12 on two inequivalent 12-point sets",
                      "an outer automorphism s of M12 was found by random search over generator images;",
                      "g acts as g on points 1..12 and as s(g) on 13..24; the last generator swaps the blocks"},
            24, gens, 190080);
    }
    {
      auto a5 = perms(10, {"(1 2 3 4 5)", "(1 2 3)"});
      write("A5wrZ2", {"Alt(5) wr Z2 on 10 points: Alt(5) on 1..5, a swap of 1..5 with 6..10"}, 10,
            {a5[0], a5[1], parse_permutation("(1 6)(2 7)(3 8)(4 9)(5 10)", 10)}, 7200);
      write("A5xA5", {"Alt(5) x Alt(5) on 10 points, factors on 1..5 and 6..10"}, 10,
            perms(10, {"(1 2 3 4 5)", "(1 2 3)", "(6 7 8 9 10)", "(6 7 8)"}), 3600);
      write("A5xA6", {"Alt(5) x Alt(6) on 11 points, factors on 1..5 and 6..11"}, 11,
            perms(11, {"(1 2 3 4 5)", "(1 2 3)", "(6 7 8 9 10)", "(9 10 11)"}), 21600);
      write("S7", {"Sym(7) on 7 points"}, 7, perms(7, {"(1 2 3 4 5 6 7)", "(1 2)"}), 5040);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
