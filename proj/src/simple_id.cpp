#include "fdeg/simple_id.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "fdeg/error.hpp"
#include "mu_table_data.hpp"

namespace fdeg {

namespace {

BigInt ipow(BigInt b, unsigned e) {
  BigInt r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
  while (b) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {p, e};
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q)
    if (prime_power(q).first) out.push_back(q);
  return out;
}

std::string family_key(const SimpleName& n) {
  switch (n.family) {
    case SimpleFamily::Alt: return "Alt";
    case SimpleFamily::PSL: return "PSL";
    case SimpleFamily::PSp: return "PSp";
    case SimpleFamily::POmegaPlus: return "POmegaPlus";
    case SimpleFamily::POmegaMinus: return "POmegaMinus";
    case SimpleFamily::PSU: return "PSU";
    case SimpleFamily::Sporadic: return "Sporadic:" + n.tag;
    case SimpleFamily::ExcLie: return n.tag;
  }
  return "";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<MuTableRow> parse_table() {
  std::vector<MuTableRow> rows;
  std::istringstream in(detail::kMuTableText);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 5) throw Error("malformed mu table line: " + line);
    rows.push_back({f[0], f[1], f[2], std::stoull(f[3]), f[4]});
  }
  return rows;
}

bool domain_matches(const std::string& domain, const SimpleName& n) {
  if (domain == "-") return true;
  auto [p, e] = prime_power(n.q);
  std::map<std::string, std::uint64_t> vars{
      {"n", static_cast<std::uint64_t>(n.d)}, {"d", static_cast<std::uint64_t>(n.d)}, {"q", n.q}, {"p", p}, {"e", e}};
  for (const auto& clause : split(domain, ',')) {
    auto ge = clause.find(">=");
    bool at_least = ge != std::string::npos;
    auto pos = at_least ? ge : clause.find('=');
    if (pos == std::string::npos) throw Error("bad domain clause " + clause);
    auto var = clause.substr(0, pos);
    auto value = std::stoull(clause.substr(pos + (at_least ? 2 : 1)));
    auto it = vars.find(var);
    if (it == vars.end()) throw Error("unknown domain variable " + var);
    if (at_least ? it->second < value : it->second != value) return false;
  }
  return true;
}

BigInt evaluate(const MuTableRow& row, const SimpleName& n) {
  const BigInt q = n.q;
  const auto& f = row.formula;
  if (f == "const") return row.value;
  if (f == "n") return n.d;
  if (f == "projective-line") return q + 1;
  if (f == "projective-space") return (ipow(q, n.d) - 1) / (q - 1);
  if (f == "symplectic-4") return (ipow(q, 4) - 1) / (q - 1);
  if (f == "omega-8") return (ipow(q, 4) - 1) * (ipow(q, 3) + 1) / (q - 1);
  if (f == "omega-3") {
    unsigned m = n.d / 2;
    return ipow(3, m - 1) * (ipow(3, m) - 1) / 2;
  }
  if (f == "g2") return (ipow(q, 6) - 1) / (q - 1);
  if (f == "f4") return (ipow(q, 12) - 1) * (ipow(q, 4) + 1) / (q - 1);
  if (f == "e6") return (ipow(q, 9) - 1) * (ipow(q, 8) + ipow(q, 4) + 1) / (q - 1);
  throw Error("unknown mu formula " + f);
}

struct LookupTable {
  std::map<BigInt, std::vector<SimpleName>> by_order;
};

const LookupTable& lookup_table() {
  static LookupTable table;
  static std::once_flag once;
  std::call_once(once, [] {
    check_order_lookup();
    for (auto& [name, order] : supported_names()) table.by_order[order].push_back(name);
  });
  return table;
}

SimpleName resolve_order(const BigInt& order, const std::function<bool()>& has_order_six) {
  if (order > kNameLookupBound) throw Unsupported("simple group order " + order.str() + " is beyond the lookup table");
  const auto& t = lookup_table().by_order;
  auto it = t.find(order);
  if (it == t.end()) throw Unsupported("no supported simple group has order " + order.str());
  if (it->second.size() == 1) return it->second.front();
  if (order == 20160) return has_order_six() ? parse_simple_name("Alt(8)") : parse_simple_name("PSL(3,4)");
  throw Error("ambiguous simple group order " + order.str());
}

}  // namespace

std::string SimpleName::to_string() const {
  std::ostringstream out;
  switch (family) {
    case SimpleFamily::Alt: out << "Alt(" << d << ")"; break;
    case SimpleFamily::Sporadic: out << tag; break;
    case SimpleFamily::ExcLie: out << tag << "(" << q << ")"; break;
    default: out << family_key(*this) << "(" << d << "," << q << ")";
  }
  return out.str();
}

SimpleName parse_simple_name(const std::string& text) {
  SimpleName n;
  auto open = text.find('(');
  if (open == std::string::npos) {
    if (text.empty()) throw InputError("empty simple group name");
    n.family = SimpleFamily::Sporadic;
    n.tag = text;
    return n;
  }
  if (text.back() != ')') throw InputError("bad simple group name " + text);
  auto head = text.substr(0, open);
  auto args = split(text.substr(open + 1, text.size() - open - 2), ',');
  try {
    if (head == "Alt" && args.size() == 1) {
      n.d = std::stoi(args[0]);
      return n;
    }
    static const std::map<std::string, SimpleFamily> classical{{"PSL", SimpleFamily::PSL},
                                                                {"PSp", SimpleFamily::PSp},
                                                                {"POmegaPlus", SimpleFamily::POmegaPlus},
                                                                {"POmegaMinus", SimpleFamily::POmegaMinus},
                                                                {"PSU", SimpleFamily::PSU}};
    if (auto it = classical.find(head); it != classical.end() && args.size() == 2) {
      n.family = it->second;
      n.d = std::stoi(args[0]);
      n.q = std::stoull(args[1]);
      return n;
    }
    if (args.size() == 1) {
      n.family = SimpleFamily::ExcLie;
      n.tag = head;
      n.q = std::stoull(args[0]);
      return n;
    }
  } catch (const std::logic_error&) {
  }
  throw InputError("bad simple group name " + text);
}

SimpleName canonical(SimpleName n) {
  auto bad = [&] { return InputError(n.to_string() + " is not a non-abelian simple group"); };
  bool pp = prime_power(n.q).first != 0;
  switch (n.family) {
    case SimpleFamily::Alt:
      if (n.d < 5) throw bad();
      break;
    case SimpleFamily::PSL:
      if (!pp || n.d < 2 || (n.d == 2 && n.q < 4)) throw bad();
      if (n.d == 2 && (n.q == 4 || n.q == 5)) return {SimpleFamily::Alt, 5, 0, {}};
      if (n.d == 2 && n.q == 9) return {SimpleFamily::Alt, 6, 0, {}};
      if (n.d == 3 && n.q == 2) return {SimpleFamily::PSL, 2, 7, {}};
      if (n.d == 4 && n.q == 2) return {SimpleFamily::Alt, 8, 0, {}};
      break;
    case SimpleFamily::PSp:
      if (!pp || n.d < 4 || n.d % 2 || (n.d == 4 && n.q == 2)) throw bad();
      break;
    case SimpleFamily::POmegaPlus:
    case SimpleFamily::POmegaMinus:
      if (!pp || n.d < 8 || n.d % 2) throw bad();
      break;
    case SimpleFamily::PSU:
      if (!pp || n.d < 3 || (n.d == 3 && n.q == 2)) throw bad();
      break;
    case SimpleFamily::Sporadic:
      if (n.tag.empty()) throw bad();
      break;
    case SimpleFamily::ExcLie:
      if (!pp || (n.tag == "G2" && n.q == 2)) throw bad();
      break;
  }
  return n;
}

BigInt simple_order(const SimpleName& name) {
  const SimpleName n = canonical(name);
  const BigInt q = n.q;
  const unsigned d = static_cast<unsigned>(n.d);
  switch (n.family) {
    case SimpleFamily::Alt: {
      BigInt r = 1;
      for (unsigned i = 3; i <= d; ++i) r *= i;
      return r;
    }
    case SimpleFamily::PSL: {
      BigInt r = ipow(q, d * (d - 1) / 2);
      for (unsigned i = 2; i <= d; ++i) r *= ipow(q, i) - 1;
      return r / gcd_u(d, n.q - 1);
    }
    case SimpleFamily::PSU: {
      BigInt r = ipow(q, d * (d - 1) / 2);
      for (unsigned i = 2; i <= d; ++i) r *= i % 2 ? ipow(q, i) + 1 : ipow(q, i) - 1;
      return r / gcd_u(d, n.q + 1);
    }
    case SimpleFamily::PSp: {
      unsigned m = d / 2;
      BigInt r = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
      return r / gcd_u(2, n.q - 1);
    }
    case SimpleFamily::POmegaPlus:
    case SimpleFamily::POmegaMinus: {
      unsigned m = d / 2;
      bool plus = n.family == SimpleFamily::POmegaPlus;
      BigInt r = ipow(q, m * (m - 1)) * (plus ? ipow(q, m) - 1 : ipow(q, m) + 1);
      for (unsigned i = 1; i < m; ++i) r *= ipow(q, 2 * i) - 1;
      BigInt qm = ipow(q, m) + (plus ? -1 : 1);
      return r / (qm % 4 == 0 ? 4 : gcd_u(2, n.q - 1));
    }
    case SimpleFamily::Sporadic:
      if (n.tag == "M12") return 95040;
      if (n.tag == "ON") return BigInt("460815505920");
      break;
    case SimpleFamily::ExcLie:
      if (n.tag == "G2") return ipow(q, 6) * (ipow(q, 6) - 1) * (ipow(q, 2) - 1);
      if (n.tag == "F4")
        return ipow(q, 24) * (ipow(q, 12) - 1) * (ipow(q, 8) - 1) * (ipow(q, 6) - 1) * (ipow(q, 2) - 1);
      if (n.tag == "E6")
        return ipow(q, 36) * (ipow(q, 12) - 1) * (ipow(q, 9) - 1) * (ipow(q, 8) - 1) * (ipow(q, 6) - 1) *
               (ipow(q, 5) - 1) * (ipow(q, 2) - 1) / gcd_u(3, n.q - 1);
      break;
  }
  throw Unsupported("no order formula for " + n.to_string());
}

const std::vector<MuTableRow>& mu_table() {
  static const std::vector<MuTableRow> rows = parse_table();
  return rows;
}

std::uint64_t mu_simple(const SimpleName& name) {
  const SimpleName n = canonical(name);
  const auto key = family_key(n);
  for (const auto& row : mu_table()) {
    if (row.family != key || !domain_matches(row.domain, n)) continue;
    BigInt v = evaluate(row, n);
    if (v <= 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw Unsupported("mu of " + n.to_string() + " does not fit a machine integer");
    return static_cast<std::uint64_t>(v);
  }
  throw Unsupported("no minimal degree entry for " + n.to_string());
}

std::vector<std::pair<SimpleName, BigInt>> supported_names(std::uint64_t bound) {
  std::vector<std::pair<SimpleName, BigInt>> out;
  auto consider = [&](SimpleName n) {
    BigInt order = simple_order(n);
    if (order > bound) return false;
    try {
      mu_simple(n);
    } catch (const Unsupported&) {
      return true;
    }
    n = canonical(n);
    if (std::none_of(out.begin(), out.end(), [&](const auto& e) { return e.first == n; }))
      out.emplace_back(n, order);
    return true;
  };
  for (int n = 5; consider({SimpleFamily::Alt, n, 0, {}}); ++n) {
  }
  // q^3/2 bounds |PSL(2,q)| from below, so this range covers every order up to `bound`.
  std::uint64_t qmax = 2;
  while (BigInt(qmax) * qmax * qmax < BigInt(bound) * 2) qmax *= 2;
  const auto qs = prime_powers_upto(qmax);
  auto scan = [&](SimpleFamily family, int d, const std::string& tag = {}) {
    bool any = false;
    for (auto q : qs) {
      SimpleName n{family, d, q, tag};
      try {
        n = canonical(n);
      } catch (const InputError&) {
        continue;
      }
      if (!consider({family, d, q, tag})) break;
      any = true;
    }
    return any;
  };
  for (int d = 2; scan(SimpleFamily::PSL, d); ++d) {
  }
  for (int d = 4; scan(SimpleFamily::PSp, d); d += 2) {
  }
  for (int d = 8; scan(SimpleFamily::POmegaPlus, d); d += 2) {
  }
  for (int d = 3; scan(SimpleFamily::PSU, d); ++d) {
  }
  for (const char* tag : {"G2", "F4", "E6"}) scan(SimpleFamily::ExcLie, 0, tag);
  for (const char* tag : {"M12", "ON"}) consider({SimpleFamily::Sporadic, 0, 0, tag});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

void check_order_lookup(std::uint64_t bound) {
  std::map<BigInt, std::vector<SimpleName>> by_order;
  for (auto& [name, order] : supported_names(bound)) by_order[order].push_back(name);
  for (const auto& [order, names] : by_order) {
    if (names.size() == 1) continue;
    bool expected = order == 20160 && names.size() == 2;
    if (!expected) {
      std::string list;
      for (const auto& n : names) list += " " + n.to_string();
      throw Error("simple group order " + order.str() + " is shared by" + list);
    }
  }
}

SimpleName name_simple(const PermGroup& g, std::uint64_t seed) {
  if (g.is_trivial() || g.is_abelian()) throw InputError("group is not non-abelian simple");
  const BigInt order = g.order();
  std::vector<Permutation> seeds = g.generators();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 8; ++i) seeds.push_back(g.random_element(rng));
  for (const auto& x : seeds) {
    if (x.is_identity()) continue;
    if (normal_closure(g, {x}).order() != order) throw InputError("group has a proper nontrivial normal subgroup");
  }
  return resolve_order(order, [&] {
    for (const auto& x : g.elements()) {
      if (element_order(x) == 6) return true;
    }
    return false;
  });
}

SimpleName name_simple(const CayleyGroup& c) {
  if (c.order() == 1 || c.is_abelian()) throw InputError("group is not non-abelian simple");
  std::vector<Elem> seeds = c.small_generating_set();
  for (Elem x = 1; x < std::min<std::size_t>(c.order(), 16); ++x) seeds.push_back(x);
  for (Elem x : seeds) {
    std::vector<Elem> conjugates;
    for (Elem h = 0; h < c.order(); ++h) conjugates.push_back(c.conj(x, h));
    if (c.subgroup_generated(conjugates).count() != c.order())
      throw InputError("group has a proper nontrivial normal subgroup");
  }
  return resolve_order(c.order(), [&] {
    for (Elem x = 0; x < c.order(); ++x) {
      if (c.element_order(x) == 6) return true;
    }
    return false;
  });
}

}  // namespace fdeg
