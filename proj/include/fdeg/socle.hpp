#pragma once

#include <cstdint>
#include <vector>

#include "fdeg/perm_group.hpp"

namespace fdeg {

struct DescentOptions {
  std::size_t random_seeds = 64;
  std::size_t exhaustive_limit = 10'000;  // certify minimality over all elements up to this order
  std::size_t random_checks = 256;        // otherwise, this many sampled elements
  std::size_t max_closures = 100'000;
  std::uint64_t seed = 1;
};

struct MinimalNormal {
  PermGroup group;
  bool probabilistic = false;  // minimality only checked on random elements
};

/// A minimal normal subgroup of G inside C (C normal in G, nontrivial), by
/// descending through normal closures of elements.
MinimalNormal minimal_normal_under(const PermGroup& g, const PermGroup& c, const DescentOptions& opt = {});

struct SocleDecomposition {
  PermGroup socle;
  std::vector<PermGroup> factors;
  std::vector<std::vector<std::size_t>> minimal_normals;  // orbits of G on factor indices
  bool fitting_free_certificate = false;
  bool probabilistic_minimality = false;
};

/// Socle of a Fitting-free group.  Throws NotFittingFree when an abelian
/// minimal normal subgroup turns up.
SocleDecomposition socle_fitting_free(const PermGroup& g, const DescentOptions& opt = {});

/// Simple direct factors of a product of non-abelian simple groups.
std::vector<PermGroup> simple_factors(const PermGroup& soc, const DescentOptions& opt = {},
                                      bool* probabilistic = nullptr);

/// For each generator of G, the permutation it induces on the factors by conjugation.
std::vector<Permutation> factor_action(const PermGroup& g, const std::vector<PermGroup>& factors);

/// Orbits of G on the factors; each orbit spans one minimal normal subgroup.
std::vector<std::vector<std::size_t>> minimal_normal_subgroups(const PermGroup& g,
                                                               const std::vector<PermGroup>& factors);

/// Index of s in factors, or InputError.
std::size_t factor_index(const PermGroup& s, const std::vector<PermGroup>& factors);

/// N_G(S1) as the stabilizer of S1 in the action on factors.
PermGroup normalizer_of_factor(const PermGroup& g, const PermGroup& s1, const std::vector<PermGroup>& factors);

/// Subgroup generated by the union of the generators.
PermGroup join(std::size_t degree, const std::vector<PermGroup>& parts);

}  // namespace fdeg
