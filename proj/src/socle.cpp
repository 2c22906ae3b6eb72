#include "fdeg/socle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "fdeg/error.hpp"

namespace fdeg {

namespace {

class Descent {
 public:
  Descent(const PermGroup& g, const DescentOptions& opt) : g_(g), opt_(opt), rng_(opt.seed) {}

  PermGroup closure(const Permutation& x) {
    if (++closures_ > opt_.max_closures) throw ResourceError("minimal normal descent exceeded its closure budget");
    return normal_closure(g_, {x});
  }

  std::vector<Permutation> seeds(const PermGroup& n) {
    std::vector<Permutation> out = n.generators();
    const std::size_t k = std::min<std::size_t>(out.size(), 16);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) out.push_back(out[i] * out[j]);
    for (std::size_t i = 0; i < opt_.random_seeds; ++i) out.push_back(n.random_element(rng_));
    return out;
  }

  // A proper nontrivial G-normal subgroup of n among closures of the given elements.
  std::optional<PermGroup> smaller(const PermGroup& n, const std::vector<Permutation>& candidates) {
    const BigInt order = n.order();
    for (const auto& y : candidates) {
      if (y.is_identity()) continue;
      auto m = closure(y);
      if (m.order() < order) return m;
    }
    return std::nullopt;
  }

  // Exhaustive check, one closure per G-conjugacy class of n.
  std::optional<PermGroup> smaller_exhaustive(const PermGroup& n) {
    const BigInt order = n.order();
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& y : n.elements()) {
      if (y.is_identity() || seen.count(y)) continue;
      std::vector<Permutation> queue{y};
      seen.insert(y);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& s : g_.generators()) {
          auto z = conjugate(queue[i], s);
          if (seen.insert(z).second) queue.push_back(z);
        }
      }
      auto m = closure(y);
      if (m.order() < order) return m;
    }
    return std::nullopt;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  const PermGroup& g_;
  const DescentOptions& opt_;
  std::mt19937_64 rng_;
  std::size_t closures_ = 0;
};


}  // namespace

PermGroup join(std::size_t degree, const std::vector<PermGroup>& parts) {
  std::vector<Permutation> gens;
  for (const auto& p : parts) gens.insert(gens.end(), p.generators().begin(), p.generators().end());
  return PermGroup(degree, std::move(gens));
}

MinimalNormal minimal_normal_under(const PermGroup& g, const PermGroup& c, const DescentOptions& opt) {
  if (c.is_trivial()) throw InputError("minimal normal search needs a nontrivial subgroup");
  Descent descent(g, opt);
  const auto& gens = c.generators();
  auto x0 = std::find_if(gens.begin(), gens.end(), [](const Permutation& x) { return !x.is_identity(); });
  PermGroup n = descent.closure(*x0);
  bool probabilistic = false;
  while (true) {
    while (auto m = descent.smaller(n, descent.seeds(n))) n = *m;
    std::optional<PermGroup> m;
    if (n.order() <= opt.exhaustive_limit) {
      probabilistic = false;
      m = descent.smaller_exhaustive(n);
    } else {
      probabilistic = true;
      std::vector<Permutation> sample;
      for (std::size_t i = 0; i < opt.random_checks; ++i) sample.push_back(n.random_element(descent.rng()));
      m = descent.smaller(n, sample);
    }
    if (!m) break;
    n = *m;
  }
  return {n, probabilistic};
}

std::vector<PermGroup> simple_factors(const PermGroup& soc, const DescentOptions& opt, bool* probabilistic) {
  std::vector<PermGroup> factors;
  PermGroup c = soc;
  while (!c.is_trivial()) {
    auto s = minimal_normal_under(soc, c, opt);
    if (s.group.is_abelian()) throw NotFittingFree("socle candidate has an abelian factor");
    if (probabilistic) *probabilistic = *probabilistic || s.probabilistic;
    factors.push_back(s.group);
    c = centralizer_of_normal(soc, join(soc.degree(), factors));
  }
  return factors;
}

SocleDecomposition socle_fitting_free(const PermGroup& g, const DescentOptions& opt) {
  if (g.is_trivial()) throw InputError("socle of the trivial group");
  SocleDecomposition out;
  std::vector<PermGroup> minimals;
  PermGroup c = g;
  while (!c.is_trivial()) {
    auto n = minimal_normal_under(g, c, opt);
    if (n.group.is_abelian())
      throw NotFittingFree("abelian minimal normal subgroup of order " + n.group.order().str());
    out.probabilistic_minimality = out.probabilistic_minimality || n.probabilistic;
    minimals.push_back(n.group);
    c = centralizer_of_normal(g, join(g.degree(), minimals));
  }
  out.fitting_free_certificate = true;
  for (const auto& n : minimals) {
    bool prob = false;
    auto parts = simple_factors(n, opt, &prob);
    out.probabilistic_minimality = out.probabilistic_minimality || prob;
    out.factors.insert(out.factors.end(), parts.begin(), parts.end());
  }
  out.socle = join(g.degree(), minimals);
  out.minimal_normals = minimal_normal_subgroups(g, out.factors);
  return out;
}

std::vector<Permutation> factor_action(const PermGroup& g, const std::vector<PermGroup>& factors) {
  const std::size_t k = factors.size();
  std::vector<Permutation> images;
  for (const auto& x : g.generators()) {
    std::vector<Point> img(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Permutation> conj;
      for (const auto& s : factors[i].generators()) conj.push_back(conjugate(s, x));
      std::size_t j = 0;
      for (; j < k; ++j) {
        if (factors[j].order() != factors[i].order()) continue;
        if (std::all_of(conj.begin(), conj.end(), [&](const Permutation& s) { return factors[j].contains(s); })) break;
      }
      if (j == k) throw Error("conjugate of a simple factor matches no factor");
      img[i] = static_cast<Point>(j);
    }
    images.emplace_back(std::move(img));
  }
  return images;
}

std::vector<std::vector<std::size_t>> minimal_normal_subgroups(const PermGroup& g,
                                                               const std::vector<PermGroup>& factors) {
  const std::size_t k = factors.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : factor_action(g, factors)) {
    for (std::size_t i = 0; i < k; ++i) {
      auto a = find(i), b = find(p[static_cast<Point>(i)]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::ptrdiff_t> slot(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return orbits;
}

std::size_t factor_index(const PermGroup& s, const std::vector<PermGroup>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].same_group(s)) return i;
  throw InputError("subgroup is not one of the simple factors");
}

PermGroup normalizer_of_factor(const PermGroup& g, const PermGroup& s1, const std::vector<PermGroup>& factors) {
  const std::size_t idx = factor_index(s1, factors);
  if (factors.size() == 1) return g;
  auto images = factor_action(g, factors);
  PermGroup target(factors.size(), images);
  Homomorphism phi(g, target, images);
  return phi.preimage_of_stabilizer({static_cast<Point>(idx)});
}

}  // namespace fdeg
