#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdeg/aut_lift.hpp"
#include "fdeg/cayley.hpp"
#include "fdeg/hint.hpp"
#include "fdeg/simple_id.hpp"
#include "fdeg/socle.hpp"

namespace fdeg {

struct PipelineOptions {
  DescentOptions descent;
  std::size_t almost_simple_limit = 2000;  // largest |A| materialized as a Cayley table
  std::size_t subgroup_limit = kDefaultSubgroupLimit;
  std::size_t aut_limit = kDefaultAutLimit;
};

/// A = N_G(S1) / C_G(S1) acting on S1 by conjugation.
struct AlmostSimpleData {
  PermGroup normalizer;
  PermGroup centralizer;
  BigInt a_order = 0;
  BigInt outer_order = 0;  // |A / S1|
};

AlmostSimpleData induced_aut_group(const PermGroup& g, const PermGroup& s1, const std::vector<PermGroup>& factors);

/// Images under the hint isomorphism of conjugation by each element of `by`,
/// as projective automorphisms of the standard copy.  Throws InputError when
/// the hint is not an isomorphism onto S1.
std::vector<ProjectiveAut> transported_automorphisms(const PermGroup& s1, const RecognitionHint& hint,
                                                      const std::vector<Permutation>& by);

struct DispatchResult {
  std::uint64_t mu = 0;
  std::string rule;    // "row N" or "default"
  std::string detail;
  bool hint_used = false;
};

/// mu(A) for the almost simple group A over S1 with the given name.
/// Throws HintRequired or Unsupported for the cases it cannot decide.
DispatchResult dispatch_table(const SimpleName& name, const PermGroup& s1, const AlmostSimpleData& a,
                              const RecognitionHint* hint, const PipelineOptions& opt = {});

/// True when A (as a Cayley table) embeds in Sym(6).
bool embeds_in_sym6(const CayleyGroup& a, const PipelineOptions& opt = {});

struct MinimalNormalRecord {
  std::vector<std::size_t> factor_indices;
  std::size_t ell = 0;
  std::string factor_name;
  BigInt factor_order = 0;
  BigInt a_order = 0;
  BigInt outer_order = 0;
  std::string rule;
  std::string detail;
  std::optional<std::uint64_t> mu;  // empty when undecided
  bool hint_used = false;
};

struct MuCertificate {
  BigInt group_order = 0;
  std::size_t degree = 0;
  BigInt socle_order = 0;
  std::vector<BigInt> factor_orders;
  std::vector<MinimalNormalRecord> records;
  std::optional<std::uint64_t> total;
  bool probabilistic_minimality = false;
  bool hint_used = false;
  std::string status = "ok";  // "ok", "unsupported", "hint-required"
  std::string message;

  std::string to_json() const;
  /// Inverse of to_json; throws InputError on a malformed document.
  static MuCertificate from_json(const std::string& text);
};

/// Builds the certificate; undecidable records leave status and message set
/// instead of throwing.  Throws NotFittingFree for groups with an abelian
/// normal subgroup.
MuCertificate mu_certificate(const PermGroup& g, const std::vector<RecognitionHint>& hints = {},
                             const PipelineOptions& opt = {});

/// As mu_certificate, but throws Unsupported or HintRequired on an incomplete certificate.
MuCertificate mu_fitting_free(const PermGroup& g, const std::vector<RecognitionHint>& hints = {},
                              const PipelineOptions& opt = {});

/// mu(G/K) through the Cayley table, for |G/K| <= bound.
std::uint64_t mu_small_quotient(const QuotientGroup& q, std::size_t bound, std::size_t subgroup_limit = kDefaultSubgroupLimit);

}  // namespace fdeg
