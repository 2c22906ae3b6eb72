#include "fdeg/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "fdeg/error.hpp"

namespace fdeg {

namespace {

using Recipe = std::vector<std::pair<std::size_t, bool>>;

bool fixes_all(const Permutation& g, const std::vector<ChainLevel>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l) {
    if (g[levels[l].base] != levels[l].base) return false;
  }
  return true;
}

void recompute_orbit(StabilizerChain& chain, std::size_t index, std::size_t degree) {
  ChainLevel& level = chain.levels[index];
  level.orbit.assign(1, level.base);
  level.slot.assign(degree, -1);
  level.slot[level.base] = 0;
  level.transversal.assign(1, Permutation::identity(degree));
  level.transversal_inv.assign(1, Permutation::identity(degree));
  level.parent.assign(1, -1);
  level.via.assign(1, 0);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (std::size_t gi : level.generators) {
      const Permutation& s = chain.strong[gi].perm;
      Point y = s[level.orbit[k]];
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation u = level.transversal[k] * s;
      level.transversal_inv.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
      level.parent.push_back(static_cast<std::int32_t>(k));
      level.via.push_back(gi);
    }
  }
}

// Strong generators making up the transversal element for `slot`, in product order.
Recipe path_recipe(const ChainLevel& level, std::int32_t slot) {
  Recipe r;
  while (slot > 0) {
    r.emplace_back(level.via[static_cast<std::size_t>(slot)], false);
    slot = level.parent[static_cast<std::size_t>(slot)];
  }
  std::reverse(r.begin(), r.end());
  return r;
}

void append_inverse(Recipe& out, const Recipe& r) {
  for (auto it = r.rbegin(); it != r.rend(); ++it) out.emplace_back(it->first, !it->second);
}

void add_level(StabilizerChain& chain, Point base, std::size_t degree) {
  ChainLevel level;
  level.base = base;
  std::size_t index = chain.levels.size();
  for (std::size_t s = 0; s < chain.strong.size(); ++s) {
    const Permutation& p = chain.strong[s].perm;
    if (!p.is_identity() && fixes_all(p, chain.levels, index)) level.generators.push_back(s);
  }
  chain.levels.push_back(std::move(level));
  recompute_orbit(chain, index, degree);
}

// Runs Schreier-Sims from level `start` downwards, assuming levels > start
// already form a chain for the subgroups they describe.
void complete_chain(StabilizerChain& chain, std::size_t start, std::size_t degree) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    bool extended = false;
    auto li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < chain.levels[li].orbit.size() && !extended; ++k) {
      std::vector<std::size_t> gens = chain.levels[li].generators;
      for (std::size_t gi : gens) {
        const ChainLevel& level = chain.levels[li];
        const Permutation& s = chain.strong[gi].perm;
        Point b = level.orbit[k];
        Point bs = s[b];
        auto target_slot = level.slot[bs];
        Permutation h = level.transversal[k] * s;
        if (h == level.transversal[static_cast<std::size_t>(target_slot)]) continue;
        h = h * level.transversal_inv[static_cast<std::size_t>(target_slot)];

        Recipe recipe = path_recipe(level, static_cast<std::int32_t>(k));
        recipe.emplace_back(gi, false);
        append_inverse(recipe, path_recipe(level, target_slot));

        std::size_t j = li + 1;
        for (; j < chain.levels.size(); ++j) {
          const ChainLevel& lj = chain.levels[j];
          Point x = h[lj.base];
          if (!lj.in_orbit(x)) break;
          auto sl = lj.slot[x];
          if (sl != 0) {
            h = h * lj.transversal_inv[static_cast<std::size_t>(sl)];
            append_inverse(recipe, path_recipe(lj, sl));
          }
        }
        if (j == chain.levels.size() && h.is_identity()) continue;

        std::size_t idx = chain.strong.size();
        Point moved = h.first_moved();
        chain.strong.push_back(StrongGenerator{std::move(h), -1, std::move(recipe)});
        if (j == chain.levels.size()) {
          add_level(chain, moved, degree);
        }
        for (std::size_t l = li + 1; l <= j && l < chain.levels.size(); ++l) {
          auto& g = chain.levels[l].generators;
          if (std::find(g.begin(), g.end(), idx) == g.end()) g.push_back(idx);
          recompute_orbit(chain, l, degree);
        }
        i = static_cast<std::ptrdiff_t>(std::min(j, chain.levels.size() - 1));
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

// Adds `g` (already recorded as strong generator `idx`) to every level it
// belongs to and returns the deepest level touched.
std::size_t insert_generator(StabilizerChain& chain, std::size_t idx, std::size_t degree) {
  const Permutation& g = chain.strong[idx].perm;
  std::size_t deepest = 0;
  std::size_t l = 0;
  for (; l < chain.levels.size(); ++l) {
    if (!fixes_all(g, chain.levels, l)) break;
    chain.levels[l].generators.push_back(idx);
    recompute_orbit(chain, l, degree);
    deepest = l;
  }
  if (l == chain.levels.size() && fixes_all(g, chain.levels, l)) {
    add_level(chain, g.first_moved(), degree);
    deepest = chain.levels.size() - 1;
  }
  return deepest;
}

std::shared_ptr<const StabilizerChain> build_chain(std::size_t degree,
                                                   const std::vector<Permutation>& gens,
                                                   const std::vector<Point>& prefix) {
  auto chain = std::make_shared<StabilizerChain>();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    chain->strong.push_back(StrongGenerator{gens[i], static_cast<int>(i), {}});
  }
  std::vector<bool> seen(degree, false);
  for (Point b : prefix) {
    if (b >= degree) throw InputError("base point out of range");
    if (seen[b]) continue;
    seen[b] = true;
    chain->levels.push_back(ChainLevel{});
    chain->levels.back().base = b;
  }
  for (const auto& s : chain->strong) {
    if (s.perm.is_identity()) continue;
    bool fixes = true;
    for (const auto& l : chain->levels) fixes = fixes && s.perm[l.base] == l.base;
    if (fixes) {
      chain->levels.push_back(ChainLevel{});
      chain->levels.back().base = s.perm.first_moved();
    }
  }
  for (std::size_t l = 0; l < chain->levels.size(); ++l) {
    for (std::size_t s = 0; s < chain->strong.size(); ++s) {
      const Permutation& p = chain->strong[s].perm;
      if (!p.is_identity() && fixes_all(p, chain->levels, l)) chain->levels[l].generators.push_back(s);
    }
    recompute_orbit(*chain, l, degree);
  }
  if (!chain->levels.empty()) complete_chain(*chain, chain->levels.size() - 1, degree);
  return chain;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw InputError("degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw InputError("generator degree does not match group degree");
  }
  chain_ = build_chain(degree_, generators_, base_prefix);
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n <= 1) return trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), Point{0});
  std::swap(tr[0], tr[1]);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation(cyc), Permutation(tr)});
}

PermGroup PermGroup::alternating(std::size_t n) {
  if (n <= 2) return trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(k);
    img[k] = 0;
    gens.emplace_back(img);
  }
  return PermGroup(n, std::move(gens));
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : chain_->levels) b.push_back(l.base);
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& s : chain_->strong) {
    if (!s.perm.is_identity()) out.push_back(s.perm);
  }
  return out;
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const auto& l : chain_->levels) n *= l.orbit.size();
  return n;
}

std::uint64_t PermGroup::small_order() const {
  BigInt n = order();
  if (n > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw ResourceError("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

bool PermGroup::is_trivial() const {
  return std::all_of(chain_->levels.begin(), chain_->levels.end(),
                     [](const ChainLevel& l) { return l.orbit.size() == 1; });
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  const auto& levels = chain_->levels;
  for (std::size_t l = from; l < levels.size(); ++l) {
    Point x = g[levels[l].base];
    if (!levels[l].in_orbit(x)) return {std::move(g), l};
    auto sl = levels[l].slot[x];
    if (sl != 0) g = g * levels[l].transversal_inv[static_cast<std::size_t>(sl)];
  }
  return {std::move(g), levels.size()};
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw InputError("degree mismatch in membership test");
  auto [residue, level] = sift(g);
  return level == chain_->levels.size() && residue.is_identity();
}

namespace {

// Expands strong generators into words over the defining generators.
class WordExpander {
 public:
  explicit WordExpander(const StabilizerChain& chain) : chain_(chain), memo_(chain.strong.size()) {}

  void append(Word& out, std::size_t strong, bool inverted) {
    const Word& w = expand(strong);
    if (out.size() + w.size() > kMaxLength) throw ResourceError("word witness too long");
    if (!inverted) {
      out.insert(out.end(), w.begin(), w.end());
    } else {
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    }
    reduce(out);
  }

 private:
  static constexpr std::size_t kMaxLength = 1u << 22;

  static void reduce(Word& w) {
    std::size_t k = 0;
    for (int x : w) {
      if (k > 0 && w[k - 1] == -x) {
        --k;
      } else {
        w[k++] = x;
      }
    }
    w.resize(k);
  }

  const Word& expand(std::size_t strong) {
    auto& slot = memo_[strong];
    if (slot) return *slot;
    const StrongGenerator& s = chain_.strong[strong];
    Word w;
    if (s.user_index >= 0) {
      w.push_back(s.user_index + 1);
    } else {
      for (auto [idx, inv] : s.recipe) append(w, idx, inv);
    }
    slot = std::move(w);
    return *slot;
  }

  const StabilizerChain& chain_;
  std::vector<std::optional<Word>> memo_;
};

}  // namespace

std::optional<Word> PermGroup::word_for(const Permutation& g) const {
  if (!contains(g)) return std::nullopt;
  const auto& levels = chain_->levels;
  // g = u_{k-1} ... u_1 u_0 where u_l is the transversal element chosen at level l.
  std::vector<std::pair<std::size_t, std::int32_t>> picks;
  Permutation h = g;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    auto sl = levels[l].slot[h[levels[l].base]];
    picks.emplace_back(l, sl);
    if (sl != 0) h = h * levels[l].transversal_inv[static_cast<std::size_t>(sl)];
  }
  WordExpander expander(*chain_);
  Word w;
  for (auto it = picks.rbegin(); it != picks.rend(); ++it) {
    for (auto [idx, inv] : path_recipe(levels[it->first], it->second)) expander.append(w, idx, inv);
  }
  return w;
}

Permutation PermGroup::evaluate(const Word& w) const {
  Permutation result = Permutation::identity(degree_);
  for (int letter : w) {
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators_.size()) {
      throw InputError("word letter out of range");
    }
    const Permutation& g = generators_[static_cast<std::size_t>(std::abs(letter)) - 1];
    result = letter > 0 ? result * g : result * g.inverse();
  }
  return result;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (const auto& level : chain_->levels) {
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    g = level.transversal[pick(rng)] * g;
  }
  return g;
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > limit) throw ResourceError("group too large to enumerate");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (const auto& level : chain_->levels) {
    std::vector<Permutation> next;
    next.reserve(out.size() * level.orbit.size());
    for (const auto& u : level.transversal) {
      for (const auto& x : out) next.push_back(u * x);
    }
    out = std::move(next);
  }
  return out;
}

PermGroup PermGroup::with_generator(const Permutation& g) const {
  if (g.degree() != degree_) throw InputError("degree mismatch");
  std::vector<Permutation> gens = generators_;
  gens.push_back(g);
  if (contains(g)) return PermGroup(degree_, std::move(gens), chain_);
  auto chain = std::make_shared<StabilizerChain>(*chain_);
  // Defining generators are the leading strong generators; shift the new one in
  // at the end of that block by recording it with its user index.
  std::size_t idx = chain->strong.size();
  chain->strong.push_back(StrongGenerator{g, static_cast<int>(gens.size() - 1), {}});
  std::size_t deepest = insert_generator(*chain, idx, degree_);
  complete_chain(*chain, deepest, degree_);
  return PermGroup(degree_, std::move(gens), std::move(chain));
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commute(generators_[i], generators_[j])) return false;
    }
  }
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

std::vector<Point> PermGroup::moved_points() const {
  std::vector<bool> moved(degree_, false);
  for (const auto& g : generators_) {
    for (Point x = 0; x < degree_; ++x) moved[x] = moved[x] || g[x] != x;
  }
  std::vector<Point> out;
  for (Point x = 0; x < degree_; ++x) {
    if (moved[x]) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

Permutation restrict_prefix(const Permutation& x, std::size_t n) {
  std::vector<Point> img(x.images().begin(), x.images().begin() + static_cast<std::ptrdiff_t>(n));
  return Permutation(std::move(img));
}

namespace {

Permutation pair_perm(const Permutation& a, const Permutation& b) {
  std::size_t n = a.degree();
  std::vector<Point> img(n + b.degree());
  for (std::size_t i = 0; i < n; ++i) img[i] = a[static_cast<Point>(i)];
  for (std::size_t j = 0; j < b.degree(); ++j) img[n + j] = static_cast<Point>(n + b[static_cast<Point>(j)]);
  return Permutation(std::move(img));
}

Permutation suffix_part(const Permutation& x, std::size_t n, std::size_t m) {
  std::vector<Point> img(m);
  for (std::size_t j = 0; j < m; ++j) img[j] = x[static_cast<Point>(n + j)] - static_cast<Point>(n);
  return Permutation(std::move(img));
}

}  // namespace

struct Homomorphism::Cache {
  std::once_flag source_once;
  std::once_flag target_once;
  std::optional<PermGroup> source_first;
  std::optional<PermGroup> target_first;
};

Homomorphism::Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      cache_(std::make_shared<Cache>()) {
  if (images_.size() != source_.generators().size()) {
    throw InputError("one image per source generator is required");
  }
  for (const auto& y : images_) {
    if (y.degree() != target_.degree()) throw InputError("image degree mismatch");
  }
}

const PermGroup& Homomorphism::graph_source_first() const {
  std::call_once(cache_->source_once, [this] {
    std::size_t n = source_.degree();
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < images_.size(); ++i) gens.push_back(pair_perm(source_.generators()[i], images_[i]));
    std::vector<Point> prefix(n);
    std::iota(prefix.begin(), prefix.end(), Point{0});
    cache_->source_first.emplace(n + target_.degree(), std::move(gens), std::move(prefix));
  });
  return *cache_->source_first;
}

const PermGroup& Homomorphism::graph_target_first() const {
  std::call_once(cache_->target_once, [this] {
    std::size_t n = source_.degree();
    std::size_t m = target_.degree();
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < images_.size(); ++i) gens.push_back(pair_perm(source_.generators()[i], images_[i]));
    std::vector<Point> prefix(m);
    std::iota(prefix.begin(), prefix.end(), static_cast<Point>(n));
    cache_->target_first.emplace(n + m, std::move(gens), std::move(prefix));
  });
  return *cache_->target_first;
}

Permutation Homomorphism::image(const Permutation& x) const {
  const PermGroup& graph = graph_source_first();
  std::size_t n = source_.degree();
  std::size_t m = target_.degree();
  Permutation probe = pair_perm(x, Permutation::identity(m));
  // Only the first n levels (the source points) are sifted.
  Permutation r = probe;
  const auto& levels = graph.chain().levels;
  for (std::size_t l = 0; l < levels.size() && levels[l].base < n; ++l) {
    Point b = r[levels[l].base];
    if (!levels[l].in_orbit(b)) throw InputError("element is not in the source group");
    auto sl = levels[l].slot[b];
    if (sl != 0) r = r * levels[l].transversal_inv[static_cast<std::size_t>(sl)];
  }
  if (!restrict_prefix(r, n).is_identity()) throw InputError("element is not in the source group");
  return suffix_part(r, n, m).inverse();
}

Permutation Homomorphism::preimage(const Permutation& y) const {
  const PermGroup& graph = graph_target_first();
  std::size_t n = source_.degree();
  std::size_t m = target_.degree();
  Permutation r = pair_perm(Permutation::identity(n), y);
  const auto& levels = graph.chain().levels;
  for (std::size_t l = 0; l < levels.size() && levels[l].base >= n; ++l) {
    Point b = r[levels[l].base];
    if (!levels[l].in_orbit(b)) throw InputError("element is not in the image");
    auto sl = levels[l].slot[b];
    if (sl != 0) r = r * levels[l].transversal_inv[static_cast<std::size_t>(sl)];
  }
  if (!suffix_part(r, n, m).is_identity()) throw InputError("element is not in the image");
  return restrict_prefix(r, n).inverse();
}

PermGroup Homomorphism::kernel() const { return preimage_of_stabilizer({}); }

PermGroup Homomorphism::preimage_of_stabilizer(const std::vector<Point>& points) const {
  std::size_t n = source_.degree();
  std::size_t m = target_.degree();
  const PermGroup& graph = graph_target_first();
  std::vector<Point> fixed;
  if (points.empty()) {
    fixed.resize(m);
    std::iota(fixed.begin(), fixed.end(), static_cast<Point>(n));
  } else {
    for (Point p : points) fixed.push_back(static_cast<Point>(n + p));
  }
  PermGroup stab = pointwise_stabilizer(graph, fixed);
  std::vector<Permutation> gens;
  for (const auto& g : stab.generators()) {
    Permutation r = restrict_prefix(g, n);
    if (!r.is_identity()) gens.push_back(std::move(r));
  }
  return PermGroup(n, std::move(gens));
}

BigInt Homomorphism::graph_order() const { return graph_source_first().order(); }

// ---------------------------------------------------------------------------

PermGroup build_group(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

BigInt group_order(const PermGroup& g) { return g.order(); }

std::pair<bool, std::optional<Word>> contains(const PermGroup& g, const Permutation& x) {
  auto w = g.word_for(x);
  return {w.has_value(), std::move(w)};
}

std::vector<Point> orbit(const PermGroup& g, Point point) {
  if (point >= g.degree()) throw InputError("point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : g.generators()) {
      Point y = s[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(g, x);
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<Point>& points) {
  PermGroup rebased(g.degree(), g.generators(), points);
  const auto& chain = rebased.chain();
  std::size_t depth = 0;
  {
    std::vector<bool> seen(g.degree(), false);
    for (Point p : points) {
      if (!seen[p]) ++depth;
      seen[p] = true;
    }
  }
  std::vector<Permutation> gens;
  if (depth < chain.levels.size()) {
    for (std::size_t idx : chain.levels[depth].generators) gens.push_back(chain.strong[idx].perm);
  } else {
    // Every strong generator that fixes the whole prefix is trivial here.
    for (const auto& s : chain.strong) {
      bool fixes = !s.perm.is_identity();
      for (std::size_t l = 0; l < depth && fixes; ++l) fixes = s.perm[chain.levels[l].base] == chain.levels[l].base;
      if (fixes) gens.push_back(s.perm);
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& subset) {
  for (const auto& s : subset) {
    if (!g.contains(s)) throw InputError("normal closure seed is not in the group");
  }
  PermGroup n(g.degree(), {});
  std::deque<Permutation> queue;
  for (const auto& s : subset) {
    if (!s.is_identity() && !n.contains(s)) {
      n = n.with_generator(s);
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Permutation s = std::move(queue.front());
    queue.pop_front();
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(s, x);
      if (!n.contains(c)) {
        n = n.with_generator(c);
        queue.push_back(std::move(c));
      }
    }
  }
  return n;
}

bool normalizes(const PermGroup& g, const PermGroup& h) {
  for (const auto& x : g.generators()) {
    for (const auto& s : h.generators()) {
      if (!h.contains(conjugate(s, x))) return false;
    }
  }
  return true;
}

PermGroup centralizer_of_normal(const PermGroup& g, const PermGroup& h, SearchBudget budget) {
  if (h.degree() != g.degree()) throw InputError("degree mismatch");
  if (!normalizes(g, h)) throw InputError("centralizer_of_normal: G does not normalize H");
  if (h.is_trivial()) return g;
  const std::size_t n = g.degree();

  std::vector<Point> support = h.moved_points();
  std::vector<bool> in_support(n, false);
  for (Point x : support) in_support[x] = true;

  // Restriction to the support of H; its kernel centralizes H.
  auto restrict_to_support = [&](const Permutation& x) {
    std::vector<Point> img(n);
    for (Point p = 0; p < n; ++p) img[p] = in_support[p] ? x[p] : p;
    return Permutation(std::move(img));
  };
  std::vector<Permutation> restricted;
  for (const auto& x : g.generators()) restricted.push_back(restrict_to_support(x));
  PermGroup image(n, restricted);
  Homomorphism rho(g, image, restricted);
  std::vector<Permutation> result_gens = pointwise_stabilizer(g, support).generators();

  // An element c centralizing H is fixed on each H-orbit O by the image y of
  // one representative x: c(x^t) = y^t.  The image must be fixed by Stab_H(x).
  struct OrbitData {
    Point rep;
    std::vector<Point> points;
    std::vector<Permutation> to_point;  // rep^to_point[k] == points[k]
    std::vector<Point> candidates;
  };
  std::vector<OrbitData> orbit_data;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> orbit_size(n, 0);
  for (Point x : support) {
    if (seen[x]) continue;
    OrbitData od;
    od.rep = x;
    od.points.push_back(x);
    od.to_point.push_back(Permutation::identity(n));
    seen[x] = true;
    for (std::size_t k = 0; k < od.points.size(); ++k) {
      for (const auto& s : h.generators()) {
        Point y = s[od.points[k]];
        if (seen[y]) continue;
        seen[y] = true;
        od.points.push_back(y);
        od.to_point.push_back(od.to_point[k] * s);
      }
    }
    for (Point y : od.points) orbit_size[y] = od.points.size();
    orbit_data.push_back(std::move(od));
  }
  for (auto& od : orbit_data) {
    PermGroup stab = pointwise_stabilizer(h, {od.rep});
    for (Point y : support) {
      if (orbit_size[y] != od.points.size()) continue;
      bool ok = std::all_of(stab.generators().begin(), stab.generators().end(),
                            [&](const Permutation& s) { return s[y] == y; });
      if (ok) od.candidates.push_back(y);
    }
  }

  std::size_t nodes = 0;
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(n, false);
  PermGroup found(n, {});

  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (k == orbit_data.size()) {
      Permutation c(img);
      if (found.contains(c) || !image.contains(c)) return;
      for (const auto& s : h.generators()) {
        if (!commute(c, s)) return;
      }
      found = found.with_generator(c);
      result_gens.push_back(rho.preimage(c));
      return;
    }
    const OrbitData& od = orbit_data[k];
    for (Point y : od.candidates) {
      if (++nodes > budget.max_nodes) throw ResourceError("centralizer search budget exceeded");
      std::vector<Point> assigned;
      bool ok = true;
      for (std::size_t t = 0; t < od.points.size(); ++t) {
        Point target = od.to_point[t][y];
        if (used[target]) {
          ok = false;
          break;
        }
        used[target] = true;
        img[od.points[t]] = target;
        assigned.push_back(target);
      }
      if (ok) search(k + 1);
      for (Point a : assigned) used[a] = false;
      for (Point p : od.points) img[p] = p;
    }
  };
  search(0);
  return PermGroup(n, std::move(result_gens));
}

PermGroup intersect_with_normal(const PermGroup& g, const PermGroup& h, SearchBudget budget) {
  if (h.degree() != g.degree()) throw InputError("degree mismatch");
  if (!normalizes(g, h)) throw InputError("intersect_with_normal: G does not normalize H");
  if (g.is_subgroup_of(h)) return g;
  if (h.is_subgroup_of(g)) return h;
  const std::size_t n = g.degree();
  const auto& glevels = g.chain().levels;
  PermGroup hb(n, h.generators(), g.base());
  const auto& hlevels = hb.chain().levels;

  // Does some element of H agree with x on the first `depth` base points?
  auto h_agrees = [&](Permutation x, std::size_t depth) {
    for (std::size_t l = 0; l < depth; ++l) {
      Point b = x[hlevels[l].base];
      if (!hlevels[l].in_orbit(b)) return false;
      auto sl = hlevels[l].slot[b];
      if (sl != 0) x = x * hlevels[l].transversal_inv[static_cast<std::size_t>(sl)];
    }
    return true;
  };

  PermGroup found(n, {});
  std::size_t nodes = 0;
  // Elements are u_{k-1} ... u_0; choose u_0 first so base images are fixed top-down.
  std::function<void(std::size_t, const Permutation&)> search = [&](std::size_t l, const Permutation& suffix) {
    if (l == glevels.size()) return;
    for (const auto& u : glevels[l].transversal) {
      if (++nodes > budget.max_nodes) throw ResourceError("intersection search budget exceeded");
      Permutation q = u * suffix;
      // q agrees with every completion on base points 0..l.
      if (!h_agrees(q, l + 1)) continue;
      if (hb.contains(q) && !found.contains(q)) found = found.with_generator(q);
      search(l + 1, q);
    }
  };
  search(0, Permutation::identity(n));
  return found;
}

std::pair<PermGroup, Homomorphism> induced_action(
    const PermGroup& g, std::size_t new_degree,
    const std::function<Permutation(const Permutation&)>& rule) {
  std::vector<Permutation> images;
  for (const auto& x : g.generators()) {
    Permutation y = rule(x);
    if (y.degree() != new_degree) throw InputError("action rule produced a permutation of the wrong degree");
    images.push_back(std::move(y));
  }
  PermGroup image(new_degree, images);
  Homomorphism phi(g, image, images);
  return {std::move(image), std::move(phi)};
}

PermGroup kernel_of_action(const PermGroup& /*g*/, const Homomorphism& phi) { return phi.kernel(); }

Permutation random_element(const PermGroup& g, std::mt19937_64& rng) { return g.random_element(rng); }

}  // namespace fdeg
