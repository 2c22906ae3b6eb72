#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fdeg/perm.hpp"

namespace fdeg {

using BigInt = boost::multiprecision::cpp_int;

/// A word over the defining generators: +k stands for generator k-1 and
/// -k for its inverse.  Words are evaluated left to right.
using Word = std::vector<int>;

/// One level of a stabilizer chain: the orbit of the base point under the
/// strong generators fixing all earlier base points, with a Schreier tree.
struct ChainLevel {
  Point base = 0;
  std::vector<std::size_t> generators;     // indices into Chain::strong
  std::vector<Point> orbit;                // orbit[0] == base
  std::vector<std::int32_t> slot;          // point -> position in orbit, or -1
  std::vector<Permutation> transversal;    // base^transversal[k] == orbit[k]
  std::vector<Permutation> transversal_inv;
  std::vector<std::int32_t> parent;        // Schreier tree parent slot (-1 at root)
  std::vector<std::size_t> via;            // strong generator used to reach the slot

  bool in_orbit(Point x) const { return slot[x] >= 0; }
};

/// Strong generator together with how it was obtained from earlier ones.
struct StrongGenerator {
  Permutation perm;
  int user_index = -1;                                 // >= 0 for a defining generator
  std::vector<std::pair<std::size_t, bool>> recipe;    // (strong index, inverted)
};

struct StabilizerChain {
  std::vector<StrongGenerator> strong;
  std::vector<ChainLevel> levels;
};

/// A permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain built on construction.
///
/// Base points are the optional prefix followed by the smallest point moved
/// by the element that forces a new level.  The chain is immutable once the
/// constructor returns, so const queries are safe from several threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup trivial(std::size_t n) { return PermGroup(n, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return *chain_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  BigInt order() const;
  /// Order as a machine integer; throws ResourceError if it does not fit.
  std::uint64_t small_order() const;
  bool is_trivial() const;

  bool contains(const Permutation& g) const;
  /// A word over generators() evaluating to g, or nullopt when g is not in the group.
  std::optional<Word> word_for(const Permutation& g) const;
  Permutation evaluate(const Word& w) const;

  /// Residue of sifting g through levels [from, end) and the level where it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  /// Uniform element from per-level uniform transversal choices.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Every element, in chain order; throws ResourceError above `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const;

  /// The group generated by the current generators and `g`; extends the chain incrementally.
  PermGroup with_generator(const Permutation& g) const;

  bool is_abelian() const;
  bool same_group(const PermGroup& other) const;
  bool is_subgroup_of(const PermGroup& other) const;

  std::vector<Point> moved_points() const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::shared_ptr<const StabilizerChain> chain)
      : degree_(degree), generators_(std::move(generators)), chain_(std::move(chain)) {}

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// Homomorphism between permutation groups given by generator images.
///
/// Evaluation uses the graph subgroup {(g, phi(g))} acting on the disjoint
/// union of both domains; chains for it are built lazily and cached.
class Homomorphism {
 public:
  Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> images);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const std::vector<Permutation>& images() const { return images_; }

  Permutation image(const Permutation& x) const;
  /// Some x in the source with image(x) == y; throws InputError if y is not in the image.
  Permutation preimage(const Permutation& y) const;
  PermGroup kernel() const;
  /// Preimage of the stabilizer of `points` (target domain) in the image group.
  PermGroup preimage_of_stabilizer(const std::vector<Point>& points) const;
  /// Order of the graph subgroup; equals |source| exactly when the map is well defined.
  BigInt graph_order() const;

 private:
  struct Cache;
  const PermGroup& graph_source_first() const;
  const PermGroup& graph_target_first() const;

  PermGroup source_;
  PermGroup target_;
  std::vector<Permutation> images_;
  std::shared_ptr<Cache> cache_;
};

/// Limits for the backtrack searches behind centralizer_of_normal and
/// intersect_with_normal.
struct SearchBudget {
  std::size_t max_nodes = 2'000'000;
};

PermGroup build_group(std::size_t degree, std::vector<Permutation> generators);
BigInt group_order(const PermGroup& g);
std::pair<bool, std::optional<Word>> contains(const PermGroup& g, const Permutation& x);
std::vector<Point> orbit(const PermGroup& g, Point point);
std::vector<std::vector<Point>> orbits(const PermGroup& g);
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<Point>& points);
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& subset);
bool normalizes(const PermGroup& g, const PermGroup& h);
PermGroup centralizer_of_normal(const PermGroup& g, const PermGroup& h, SearchBudget budget = {});
PermGroup intersect_with_normal(const PermGroup& g, const PermGroup& h, SearchBudget budget = {});

/// Image of g on a new domain of `new_degree` points, one permutation per generator.
std::pair<PermGroup, Homomorphism> induced_action(
    const PermGroup& g, std::size_t new_degree,
    const std::function<Permutation(const Permutation&)>& rule);
PermGroup kernel_of_action(const PermGroup& g, const Homomorphism& phi);
Permutation random_element(const PermGroup& g, std::mt19937_64& rng);

/// Restriction of a permutation of a larger domain to the invariant prefix [0, n).
Permutation restrict_prefix(const Permutation& x, std::size_t n);

}  // namespace fdeg
