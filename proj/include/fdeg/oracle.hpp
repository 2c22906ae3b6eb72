#pragma once

#include <cstddef>
#include <vector>

#include "fdeg/cayley.hpp"

namespace fdeg {

/// Subgroups whose coset actions together give a faithful action of minimal degree.
struct OracleWitness {
  std::vector<ElementSet> subgroups;
  std::size_t total_degree = 0;
  ElementSet core_intersection;
};

struct OracleResult {
  std::size_t mu = 0;
  OracleWitness witness;
};

/// Largest normal subgroup inside h (intersection of its conjugates).
/// Throws InputError if h is not a subgroup.
ElementSet core(const CayleyGroup& c, const ElementSet& h);

/// True when the cores of the given subgroups intersect trivially.
bool is_faithful_collection(const CayleyGroup& c, const std::vector<ElementSet>& subgroups);

/// Minimal faithful permutation degree by shortest path over normal subgroups:
/// from N, choosing a subgroup H costs [G:H] and moves to N meet core(H).
OracleResult mu_oracle(const CayleyGroup& c, std::size_t limit = kDefaultSubgroupLimit);

}  // namespace fdeg
