#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fdeg/perm_group.hpp"

namespace fdeg {

using Elem = std::uint32_t;

/// Subset of a small group's elements, as a bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool test(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t count() const;
  bool empty() const;
  bool subset_of(const ElementSet& other) const;
  std::vector<Elem> to_vector() const;

  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A small group held as a full multiplication table; element 0 is the identity.
class CayleyGroup {
 public:
  /// Validates the table: Latin square rows and columns, identity at 0, and
  /// associativity (exhaustive up to order 256, sampled above).
  explicit CayleyGroup(std::vector<std::vector<Elem>> table);

  /// Direct product of cyclic groups of the given orders.
  static CayleyGroup abelian(const std::vector<std::size_t>& cyclic_orders);

  std::size_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  std::size_t element_order(Elem a) const;

  /// Permutation labels when built from a permutation group (coset representatives for quotients).
  const std::vector<Permutation>& labels() const { return labels_; }
  void set_labels(std::vector<Permutation> labels) { labels_ = std::move(labels); }

  ElementSet subgroup_generated(const std::vector<Elem>& gens) const;
  bool is_subgroup(const ElementSet& s) const;
  bool is_normal(const ElementSet& s) const;
  bool is_abelian() const;
  ElementSet whole() const;
  ElementSet trivial() const;

  /// A generating set chosen greedily; each pick strictly enlarges the generated subgroup.
  std::vector<Elem> small_generating_set() const;

 private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Permutation> labels_;
};

/// G/K for K normal in G.
class QuotientGroup {
 public:
  /// Throws InputError unless G normalizes K and K <= G.
  QuotientGroup(PermGroup g, PermGroup k);

  const PermGroup& group() const { return g_; }
  const PermGroup& kernel() const { return k_; }
  BigInt order() const { return g_.order() / k_.order(); }

 private:
  PermGroup g_;
  PermGroup k_;
};

/// Lists the elements of G (or G/K) by repeated squaring of the generating
/// set and fills the Cayley table.  Throws ResourceError above `bound`.
CayleyGroup list_elements(const PermGroup& g, std::size_t bound);
CayleyGroup list_elements(const QuotientGroup& q, std::size_t bound);

struct SubgroupClass {
  std::vector<ElementSet> members;  // members[0] is the representative
  std::size_t subgroup_order = 0;
  ElementSet core;                  // intersection of the members
};

inline constexpr std::size_t kDefaultSubgroupLimit = 2000;
inline constexpr std::size_t kDefaultAutLimit = 5000;

/// All subgroups, each exactly once.
std::vector<ElementSet> all_subgroups(const CayleyGroup& c, std::size_t limit = kDefaultSubgroupLimit);
/// All subgroups grouped into conjugacy classes, ordered by subgroup order.
std::vector<SubgroupClass> subgroup_classes(const CayleyGroup& c, std::size_t limit = kDefaultSubgroupLimit);

/// Element maps: map[x] is the image of element x.
using GroupMap = std::vector<Elem>;

std::vector<GroupMap> automorphism_group(const CayleyGroup& c, std::size_t limit = kDefaultAutLimit);
std::optional<GroupMap> isomorphism_search(const CayleyGroup& a, const CayleyGroup& b,
                                           std::size_t limit = kDefaultAutLimit);

/// Subgroup of `c` given by an element set, re-indexed as its own Cayley group.
CayleyGroup subgroup_as_group(const CayleyGroup& c, const ElementSet& s);

}  // namespace fdeg
