#include "fdeg/cayley.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "fdeg/error.hpp"

namespace fdeg {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

CayleyGroup::CayleyGroup(std::vector<std::vector<Elem>> table) : order_(table.size()) {
  const std::size_t m = order_;
  if (m == 0) throw InputError("empty Cayley table");
  table_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (table[i].size() != m) throw InputError("Cayley table is not square");
    std::vector<bool> seen(m, false);
    for (std::size_t j = 0; j < m; ++j) {
      Elem x = table[i][j];
      if (x >= m || seen[x]) throw InputError("Cayley table row is not a permutation");
      seen[x] = true;
      table_[i * m + j] = x;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<bool> seen(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      Elem x = table_[i * m + j];
      if (seen[x]) throw InputError("Cayley table column is not a permutation");
      seen[x] = true;
    }
  }
  for (Elem i = 0; i < m; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i) throw InputError("element 0 is not the identity");
  }
  inverse_.assign(m, 0);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      if (mul(i, j) == 0) {
        inverse_[i] = j;
        break;
      }
    }
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("Cayley table is not associative");
  };
  if (m <= 256) {
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        for (Elem c = 0; c < m; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(m);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(m - 1));
    for (int t = 0; t < 20000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

CayleyGroup CayleyGroup::abelian(const std::vector<std::size_t>& cyclic_orders) {
  std::size_t m = 1;
  for (auto k : cyclic_orders) {
    if (k == 0) throw InputError("cyclic factor of order 0");
    m *= k;
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d;
    for (auto k : cyclic_orders) {
      d.push_back(x % k);
      x /= k;
    }
    return d;
  };
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a) {
    auto da = digits(a);
    for (std::size_t b = 0; b < m; ++b) {
      auto db = digits(b);
      std::size_t x = 0, radix = 1;
      for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
        x += ((da[i] + db[i]) % cyclic_orders[i]) * radix;
        radix *= cyclic_orders[i];
      }
      table[a][b] = static_cast<Elem>(x);
    }
  }
  return CayleyGroup(std::move(table));
}

std::size_t CayleyGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

ElementSet CayleyGroup::subgroup_generated(const std::vector<Elem>& gens) const {
  ElementSet s(order_);
  s.set(0);
  std::vector<Elem> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Elem g : gens) {
      Elem y = mul(queue[k], g);
      if (!s.test(y)) {
        s.set(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

bool CayleyGroup::is_subgroup(const ElementSet& s) const {
  if (!s.test(0)) return false;
  auto els = s.to_vector();
  for (Elem a : els)
    for (Elem b : els)
      if (!s.test(mul(a, b))) return false;
  return true;
}

bool CayleyGroup::is_normal(const ElementSet& s) const {
  auto gens = small_generating_set();
  for (Elem x : s.to_vector())
    for (Elem g : gens)
      if (!s.test(conj(x, g))) return false;
  return true;
}

bool CayleyGroup::is_abelian() const {
  auto gens = small_generating_set();
  for (Elem a : gens)
    for (Elem b : gens)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementSet CayleyGroup::whole() const {
  ElementSet s(order_);
  for (Elem x = 0; x < order_; ++x) s.set(x);
  return s;
}

ElementSet CayleyGroup::trivial() const {
  ElementSet s(order_);
  s.set(0);
  return s;
}

std::vector<Elem> CayleyGroup::small_generating_set() const {
  std::vector<std::pair<std::size_t, Elem>> by_order;
  for (Elem x = 1; x < order_; ++x) by_order.emplace_back(element_order(x), x);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Elem> gens;
  ElementSet h = trivial();
  std::size_t size = 1;
  for (auto [ord, x] : by_order) {
    if (size == order_) break;
    if (h.test(x)) continue;
    gens.push_back(x);
    h = subgroup_generated(gens);
    size = h.count();
  }
  return gens;
}

CayleyGroup subgroup_as_group(const CayleyGroup& c, const ElementSet& s) {
  auto els = s.to_vector();
  std::vector<Elem> index(c.order(), 0);
  for (std::size_t i = 0; i < els.size(); ++i) index[els[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> table(els.size(), std::vector<Elem>(els.size()));
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      Elem p = c.mul(els[i], els[j]);
      if (!s.test(p)) throw InputError("element set is not a subgroup");
      table[i][j] = index[p];
    }
  }
  CayleyGroup out(std::move(table));
  if (!c.labels().empty()) {
    std::vector<Permutation> labels;
    for (Elem x : els) labels.push_back(c.labels()[x]);
    out.set_labels(std::move(labels));
  }
  return out;
}

// ---------------------------------------------------------------------------

QuotientGroup::QuotientGroup(PermGroup g, PermGroup k) : g_(std::move(g)), k_(std::move(k)) {
  if (g_.degree() != k_.degree()) throw InputError("quotient: degree mismatch");
  if (!k_.is_subgroup_of(g_)) throw InputError("quotient: kernel is not a subgroup");
  if (!normalizes(g_, k_)) throw InputError("quotient: kernel is not normal");
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Coset lookup: xK = yK iff x y^-1 in K.  Candidates are prefiltered by the
// K-orbits of the point images, which are constant on a coset.
class CosetIndex {
 public:
  explicit CosetIndex(const PermGroup& k) : k_(k), trivial_(k.is_trivial()), orbit_id_(k.degree()) {
    Point id = 0;
    for (const auto& o : orbits(k)) {
      for (Point p : o) orbit_id_[p] = id;
      ++id;
    }
  }

  std::optional<Elem> find(const Permutation& x) const {
    auto it = buckets_.find(key(x));
    if (it == buckets_.end()) return std::nullopt;
    for (Elem idx : it->second) {
      if (trivial_ ? reps_[idx] == x : k_.contains(x * reps_[idx].inverse())) return idx;
    }
    return std::nullopt;
  }

  Elem add(Permutation x) {
    Elem idx = static_cast<Elem>(reps_.size());
    buckets_[key(x)].push_back(idx);
    reps_.push_back(std::move(x));
    return idx;
  }

  const std::vector<Permutation>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

 private:
  std::vector<Point> key(const Permutation& x) const {
    std::vector<Point> v(x.degree());
    for (Point p = 0; p < x.degree(); ++p) v[p] = orbit_id_[x[p]];
    return v;
  }

  const PermGroup& k_;
  bool trivial_;
  std::vector<Point> orbit_id_;
  std::unordered_map<std::vector<Point>, std::vector<Elem>, VectorHash> buckets_;
  std::vector<Permutation> reps_;
};

CayleyGroup list_cosets(const PermGroup& g, const PermGroup& k, std::size_t bound) {
  BigInt big = g.order() / k.order();
  if (big > bound) throw ResourceError("group too large to list: order " + big.str());
  const auto target = static_cast<std::size_t>(big);

  CosetIndex index(k);
  index.add(Permutation::identity(g.degree()));
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    if (!index.find(s)) {
      index.add(s);
      gens.push_back(s);
    } else if (!k.contains(s)) {
      gens.push_back(s);
    }
  }
  // Doubling: T_{i+1} = T_i T_i until all cosets are present.
  while (index.size() < target) {
    std::size_t before = index.size();
    for (std::size_t i = 0; i < before && index.size() < target; ++i) {
      for (std::size_t j = 0; j < before && index.size() < target; ++j) {
        Permutation p = index.reps()[i] * index.reps()[j];
        if (!index.find(p)) index.add(std::move(p));
      }
    }
    if (index.size() == before) throw Error("element listing stalled");
  }

  const std::size_t m = target;
  std::vector<std::vector<Elem>> right(gens.size(), std::vector<Elem>(m));
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (std::size_t x = 0; x < m; ++x) right[gi][x] = *index.find(index.reps()[x] * gens[gi]);
  }
  // Spanning tree: element j = parent[j] * gens[via[j]].
  std::vector<Elem> order{0}, parent(m, 0), via(m, 0);
  std::vector<bool> seen(m, false);
  seen[0] = true;
  for (std::size_t k2 = 0; k2 < order.size(); ++k2) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Elem y = right[gi][order[k2]];
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = order[k2];
      via[y] = static_cast<Elem>(gi);
      order.push_back(y);
    }
  }
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i) {
    table[i][0] = static_cast<Elem>(i);
    for (std::size_t t = 1; t < order.size(); ++t) {
      Elem j = order[t];
      table[i][j] = right[via[j]][table[i][parent[j]]];
    }
  }
  CayleyGroup c(std::move(table));
  c.set_labels(index.reps());
  return c;
}

}  // namespace

CayleyGroup list_elements(const PermGroup& g, std::size_t bound) {
  return list_cosets(g, PermGroup::trivial(g.degree()), bound);
}

CayleyGroup list_elements(const QuotientGroup& q, std::size_t bound) {
  return list_cosets(q.group(), q.kernel(), bound);
}

// ---------------------------------------------------------------------------

namespace {

bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct Generated {
  ElementSet set;
  std::vector<Elem> gens;
};

// <H, z> by adding whole right cosets of H.
ElementSet join(const CayleyGroup& c, const ElementSet& h, const std::vector<Elem>& hgens, Elem z) {
  ElementSet res = h;
  auto helems = h.to_vector();
  std::vector<Elem> gens = hgens;
  gens.push_back(z);
  std::vector<Elem> reps{0};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (Elem s : gens) {
      Elem e = c.mul(reps[k], s);
      if (res.test(e)) continue;
      for (Elem x : helems) res.set(c.mul(x, e));
      reps.push_back(e);
    }
  }
  return res;
}

std::vector<ElementSet> conjugacy_class_of(const CayleyGroup& c, const ElementSet& h,
                                           const std::vector<Elem>& ggens) {
  std::vector<ElementSet> out{h};
  std::unordered_set<ElementSet, ElementSetHash> seen{h};
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto els = out[k].to_vector();
    for (Elem g : ggens) {
      ElementSet conj(c.order());
      for (Elem x : els) conj.set(c.conj(x, g));
      if (seen.insert(conj).second) out.push_back(std::move(conj));
    }
  }
  return out;
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const CayleyGroup& c, std::size_t limit) {
  if (c.order() > limit) throw ResourceError("group too large for subgroup enumeration");
  const auto ggens = c.small_generating_set();

  // Distinct cyclic subgroups of prime-power order, one generator each.
  std::vector<Generated> cyclic;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Elem x = 1; x < c.order(); ++x) {
      if (!is_prime_power(c.element_order(x))) continue;
      auto s = c.subgroup_generated({x});
      if (seen.insert(s).second) cyclic.push_back({std::move(s), {x}});
    }
  }

  std::vector<SubgroupClass> classes;
  std::vector<std::vector<Elem>> class_gens;
  std::unordered_set<ElementSet, ElementSetHash> known;
  auto add_class = [&](const ElementSet& s, std::vector<Elem> gens) {
    SubgroupClass sc;
    sc.members = conjugacy_class_of(c, s, ggens);
    sc.subgroup_order = s.count();
    for (const auto& m : sc.members) known.insert(m);
    classes.push_back(std::move(sc));
    class_gens.push_back(std::move(gens));
  };
  add_class(c.trivial(), {});
  for (const auto& z : cyclic) {
    if (!known.count(z.set)) add_class(z.set, z.gens);
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const auto& z : cyclic) {
      const ElementSet& h = classes[k].members[0];
      if (h.test(z.gens[0])) continue;
      ElementSet j = join(c, h, class_gens[k], z.gens[0]);
      if (known.count(j)) continue;
      auto gens = class_gens[k];
      gens.push_back(z.gens[0]);
      add_class(j, std::move(gens));
    }
  }

  std::vector<std::size_t> perm(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].subgroup_order < classes[b].subgroup_order;
  });
  std::vector<SubgroupClass> sorted;
  for (std::size_t i : perm) {
    auto sc = std::move(classes[i]);
    sc.core = sc.members[0];
    for (const auto& m : sc.members) sc.core &= m;
    sorted.push_back(std::move(sc));
  }
  return sorted;
}

std::vector<ElementSet> all_subgroups(const CayleyGroup& c, std::size_t limit) {
  std::vector<ElementSet> out;
  for (auto& sc : subgroup_classes(c, limit)) {
    for (auto& m : sc.members) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Invariants {
  std::vector<std::size_t> order;
  std::vector<std::size_t> centralizer;

  explicit Invariants(const CayleyGroup& c) : order(c.order()), centralizer(c.order(), 0) {
    for (Elem x = 0; x < c.order(); ++x) {
      order[x] = c.element_order(x);
      for (Elem y = 0; y < c.order(); ++y) centralizer[x] += c.mul(x, y) == c.mul(y, x);
    }
  }
  std::pair<std::size_t, std::size_t> key(Elem x) const { return {order[x], centralizer[x]}; }
};

// Enumerates isomorphisms a -> b by choosing images of a greedy generating
// set of a and extending over the generated subgroup after each choice.
class IsoSearch {
 public:
  IsoSearch(const CayleyGroup& a, const CayleyGroup& b, bool want_all)
      : a_(a), b_(b), want_all_(want_all), inv_a_(a), inv_b_(b) {
    gens_ = a.small_generating_set();
    for (Elem g : gens_) {
      std::vector<Elem> cand;
      for (Elem y = 0; y < b.order(); ++y) {
        if (inv_b_.key(y) == inv_a_.key(g)) cand.push_back(y);
      }
      candidates_.push_back(std::move(cand));
    }
  }

  bool invariants_match() const {
    std::map<std::pair<std::size_t, std::size_t>, long> hist;
    for (Elem x = 0; x < a_.order(); ++x) ++hist[inv_a_.key(x)];
    for (Elem y = 0; y < b_.order(); ++y) --hist[inv_b_.key(y)];
    return std::all_of(hist.begin(), hist.end(), [](const auto& kv) { return kv.second == 0; });
  }

  std::vector<GroupMap> run() {
    if (a_.order() != b_.order() || !invariants_match()) return {};
    map_.assign(a_.order(), kNone);
    used_.assign(b_.order(), false);
    map_[0] = 0;
    used_[0] = true;
    images_.clear();
    search(0);
    return std::move(found_);
  }

 private:
  static constexpr Elem kNone = ~Elem{0};

  bool extend(std::size_t level, std::vector<Elem>& assigned) {
    // BFS over <gens_[0..level]> from the identity.
    std::vector<Elem> queue{0};
    std::vector<bool> visited(a_.order(), false);
    visited[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Elem x = queue[k];
      for (std::size_t j = 0; j <= level; ++j) {
        Elem y = a_.mul(x, gens_[j]);
        Elem img = b_.mul(map_[x], images_[j]);
        if (map_[y] == kNone) {
          if (used_[img]) return false;
          map_[y] = img;
          used_[img] = true;
          assigned.push_back(y);
        } else if (map_[y] != img) {
          return false;
        }
        if (!visited[y]) {
          visited[y] = true;
          queue.push_back(y);
        }
      }
    }
    return true;
  }

  void search(std::size_t level) {
    if (!found_.empty() && !want_all_) return;
    if (level == gens_.size()) {
      found_.push_back(map_);
      return;
    }
    Elem g = gens_[level];
    for (Elem y : candidates_[level]) {
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j) {
        ok = inv_a_.order[a_.mul(gens_[j], g)] == inv_b_.order[b_.mul(images_[j], y)] &&
             inv_a_.order[a_.mul(gens_[j], a_.inv(g))] == inv_b_.order[b_.mul(images_[j], b_.inv(y))];
      }
      if (!ok) continue;
      if (map_[g] != kNone && map_[g] != y) continue;
      images_.push_back(y);
      std::vector<Elem> assigned;
      if (extend(level, assigned)) search(level + 1);
      for (Elem x : assigned) {
        used_[map_[x]] = false;
        map_[x] = kNone;
      }
      images_.pop_back();
      if (!found_.empty() && !want_all_) return;
    }
  }

  const CayleyGroup& a_;
  const CayleyGroup& b_;
  bool want_all_;
  Invariants inv_a_, inv_b_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  GroupMap map_;
  std::vector<bool> used_;
  std::vector<Elem> images_;
  std::vector<GroupMap> found_;
};

}  // namespace

std::vector<GroupMap> automorphism_group(const CayleyGroup& c, std::size_t limit) {
  if (c.order() > limit) throw ResourceError("group too large for automorphism search");
  return IsoSearch(c, c, true).run();
}

std::optional<GroupMap> isomorphism_search(const CayleyGroup& a, const CayleyGroup& b, std::size_t limit) {
  if (a.order() > limit || b.order() > limit) throw ResourceError("group too large for isomorphism search");
  auto found = IsoSearch(a, b, false).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace fdeg
