#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdeg/cayley.hpp"
#include "fdeg/perm_group.hpp"

namespace fdeg {

enum class SimpleFamily { Alt, PSL, PSp, POmegaPlus, POmegaMinus, PSU, Sporadic, ExcLie };

/// Name of a non-abelian simple group.  `d` is the degree for Alt and the
/// matrix dimension for classical families; `tag` names sporadic and
/// exceptional types ("M12", "G2", ...).
struct SimpleName {
  SimpleFamily family = SimpleFamily::Alt;
  int d = 0;
  std::uint64_t q = 0;
  std::string tag;

  std::string to_string() const;
  friend bool operator==(const SimpleName&, const SimpleName&) = default;
};

/// Parses the forms printed by to_string, e.g. "Alt(7)", "PSL(3,4)", "M12", "G2(3)".
SimpleName parse_simple_name(const std::string& text);

/// Applies the aliases Alt(5)=PSL(2,4)=PSL(2,5), Alt(6)=PSL(2,9),
/// PSL(3,2)->PSL(2,7), PSL(4,2)->Alt(8).  Throws InputError outside the simple range.
SimpleName canonical(SimpleName name);

/// Group order.  Throws Unsupported for families without an order formula here.
BigInt simple_order(const SimpleName& name);

/// Minimal faithful degree from the shipped table; Unsupported when no row matches.
std::uint64_t mu_simple(const SimpleName& name);

struct MuTableRow {
  std::string family;
  std::string domain;
  std::string formula;
  std::uint64_t value = 0;
  std::string source;
};

const std::vector<MuTableRow>& mu_table();

inline constexpr std::uint64_t kNameLookupBound = 1'000'000'000'000ULL;

/// Canonical supported names of order at most `bound`, sorted by order.
std::vector<std::pair<SimpleName, BigInt>> supported_names(std::uint64_t bound = kNameLookupBound);

/// Checks that order determines the canonical name except for 20160.
/// Throws Error on any other collision.
void check_order_lookup(std::uint64_t bound = kNameLookupBound);

/// Names a simple group by order, separating Alt(8) from PSL(3,4) by the
/// presence of an element of order 6.  Throws InputError when the group is
/// abelian or a sampled normal closure is proper, Unsupported when the order
/// is not in the table.
SimpleName name_simple(const PermGroup& g, std::uint64_t seed = 1);
SimpleName name_simple(const CayleyGroup& c);

}  // namespace fdeg
