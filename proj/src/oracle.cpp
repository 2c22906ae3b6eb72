#include "fdeg/oracle.hpp"

#include <algorithm>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "fdeg/error.hpp"

namespace fdeg {

ElementSet core(const CayleyGroup& c, const ElementSet& h) {
  if (h.universe() != c.order() || !c.is_subgroup(h)) throw InputError("core: not a subgroup");
  ElementSet result = h;
  auto els = h.to_vector();
  for (Elem g = 0; g < c.order(); ++g) {
    ElementSet conj(c.order());
    for (Elem x : els) conj.set(c.conj(x, g));
    result &= conj;
  }
  return result;
}

bool is_faithful_collection(const CayleyGroup& c, const std::vector<ElementSet>& subgroups) {
  ElementSet meet = c.whole();
  for (const auto& h : subgroups) meet &= core(c, h);
  return meet.count() == 1;
}

namespace {

std::size_t largest_prime_factor(std::size_t n) {
  std::size_t best = 0;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  }
  return n > 1 ? n : best;
}

std::size_t sum_of_prime_factors(std::size_t n) {
  std::size_t s = 0;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      s += p;
      n /= p;
    }
  }
  return n > 1 ? s + n : s;
}

}  // namespace

OracleResult mu_oracle(const CayleyGroup& c, std::size_t limit) {
  const std::size_t m = c.order();
  OracleResult result;
  result.witness.core_intersection = c.trivial();
  if (m == 1) return result;

  // One edge per distinct core, keeping the cheapest subgroup.
  struct Edge {
    ElementSet core;
    std::size_t cost;
    ElementSet subgroup;
  };
  std::vector<Edge> edges;
  {
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> by_core;
    for (auto& sc : subgroup_classes(c, limit)) {
      if (sc.subgroup_order == m) continue;
      std::size_t cost = m / sc.subgroup_order;
      auto it = by_core.find(sc.core);
      if (it == by_core.end()) {
        by_core.emplace(sc.core, edges.size());
        edges.push_back({sc.core, cost, sc.members[0]});
      } else if (cost < edges[it->second].cost) {
        edges[it->second].cost = cost;
        edges[it->second].subgroup = sc.members[0];
      }
    }
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.cost < b.cost; });

  // A* with a consistent lower bound on the remaining degree: an abelian
  // section of order r needs degree at least sopfr(r); in general the largest
  // prime dividing |N| must divide some index used.
  const bool abelian = c.is_abelian();
  auto heuristic = [&](std::size_t n) { return abelian ? sum_of_prime_factors(n) : largest_prime_factor(n); };

  struct Node {
    ElementSet set;
    std::size_t size;
    std::size_t dist;
    std::size_t prev;
    std::size_t edge;
    bool closed;
  };
  std::vector<Node> nodes;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  using Item = std::tuple<std::size_t, std::size_t, std::size_t>;  // f, -g (as inverted), node
  auto cmp = [](const Item& a, const Item& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> open(cmp);
  nodes.push_back({c.whole(), m, 0, 0, 0, false});
  index.emplace(c.whole(), 0);
  open.emplace(heuristic(m), 0, 0);

  std::size_t goal = static_cast<std::size_t>(-1);
  while (!open.empty()) {
    auto [f, g, id] = open.top();
    open.pop();
    if (nodes[id].closed || g != nodes[id].dist) continue;
    nodes[id].closed = true;
    if (nodes[id].size == 1) {
      goal = id;
      break;
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (nodes[id].set.subset_of(edges[e].core)) continue;
      ElementSet next = nodes[id].set & edges[e].core;
      std::size_t d = nodes[id].dist + edges[e].cost;
      auto it = index.find(next);
      std::size_t nid;
      if (it == index.end()) {
        nid = nodes.size();
        std::size_t size = next.count();
        index.emplace(next, nid);
        nodes.push_back({std::move(next), size, d, id, e, false});
      } else {
        nid = it->second;
        if (nodes[nid].closed || nodes[nid].dist <= d) continue;
        nodes[nid].dist = d;
        nodes[nid].prev = id;
        nodes[nid].edge = e;
      }
      open.emplace(d + heuristic(nodes[nid].size), d, nid);
    }
  }
  if (goal == static_cast<std::size_t>(-1)) throw Error("oracle search found no faithful collection");

  result.mu = nodes[goal].dist;
  for (std::size_t id = goal; id != 0; id = nodes[id].prev) {
    result.witness.subgroups.push_back(edges[nodes[id].edge].subgroup);
  }
  std::reverse(result.witness.subgroups.begin(), result.witness.subgroups.end());
  result.witness.total_degree = result.mu;
  ElementSet meet = c.whole();
  for (const auto& h : result.witness.subgroups) meet &= core(c, h);
  result.witness.core_intersection = meet;
  return result;
}

}  // namespace fdeg
