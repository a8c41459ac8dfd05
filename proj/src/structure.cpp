#include "ng/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ng/errors.hpp"

namespace ng {
namespace {

bool is_p_power(std::size_t n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t p_part(std::size_t n, int p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

}  // namespace

std::vector<int> prime_divisors(std::size_t n) {
  std::vector<int> out;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

ElementSet sylow_from(const PermGroup& g, int p, int seed) {
  std::size_t target = p_part(g.size(), p);
  if (target == 1)
    throw std::invalid_argument("sylow: p does not divide |G|");
  if (g.order_of(seed) % p != 0 || !is_p_power(g.order_of(seed), p))
    throw std::invalid_argument("sylow: seed is not a p-element");

  ElementSet subgroup = subgroup_closure(g, {seed});
  while (subgroup.size() < target) {
    ElementSet norm = normalizer(g, subgroup);
    std::vector<bool> in(g.size(), false);
    for (int i : subgroup) in[i] = true;
    bool extended = false;
    for (int y : norm) {
      if (in[y] || y == g.identity_index()) continue;
      if (!is_p_power(g.order_of(y), p)) continue;
      ElementSet bigger = subgroup_closure(g, [&] {
        ElementSet s = subgroup;
        s.push_back(y);
        return s;
      }());
      if (is_p_power(bigger.size(), p)) {
        subgroup = std::move(bigger);
        extended = true;
        break;
      }
    }
    if (!extended)
      throw std::logic_error("sylow ascent stalled below the p-part");
  }
  return subgroup;
}

ElementSet sylow(const PermGroup& g, int p) {
  if (p_part(g.size(), p) == 1)
    throw std::invalid_argument("sylow: p does not divide |G|");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.order_of(static_cast<int>(i)) == p)
      return sylow_from(g, p, static_cast<int>(i));
  throw std::logic_error("no element of order p (Cauchy violated)");
}

ElementSet p_core(const PermGroup& g, int p) {
  ElementSet syl = sylow(g, p);
  std::vector<bool> in(g.size(), false);
  for (int i : syl) in[i] = true;
  std::vector<bool> core = in;
  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    for (std::size_t x = 0; x < g.size(); ++x)
      if (core[x] && !in[g.conj(static_cast<int>(x),
                                g.inv(static_cast<int>(gi)))])
        core[x] = false;
  }
  // core[x] survives iff x lies in every conjugate g . syl . g^-1.
  ElementSet out;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (core[x]) out.push_back(static_cast<int>(x));
  return out;
}

ElementSet fitting(const PermGroup& g) {
  ElementSet seed;
  for (int p : prime_divisors(g.size())) {
    ElementSet core = p_core(g, p);
    seed.insert(seed.end(), core.begin(), core.end());
  }
  if (seed.empty()) seed.push_back(g.identity_index());
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return subgroup_closure(g, seed);
}

std::vector<ElementSet> strongly_self_centralizing(const PermGroup& g) {
  std::set<ElementSet> found;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (static_cast<int>(x) == g.identity_index()) continue;
    ElementSet cand = centralizer(g, static_cast<int>(x));
    if (found.count(cand)) continue;
    bool ok = true;
    for (int y : cand) {
      if (y == g.identity_index()) continue;
      if (centralizer(g, y) != cand) {
        ok = false;
        break;
      }
    }
    if (ok) found.insert(std::move(cand));
  }
  return {found.begin(), found.end()};
}

ComponentOrbits component_orbits(const PermGroup& g, const NilGraph& graph) {
  int kappa = graph.kappa();
  // Conjugation permutes components; follow one representative element.
  std::vector<int> parent(kappa);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < kappa; ++c) {
    int rep = graph.element_of(graph.components()[c].front());
    for (const auto& gen : g.generators()) {
      int gi = g.index_of(gen);
      int image = graph.vertex_of_element(g.conj(rep, gi));
      int target = graph.component_of(image);
      int a = find(c), b = find(target);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> buckets(kappa);
  for (int c = 0; c < kappa; ++c) buckets[find(c)].push_back(c);
  ComponentOrbits out;
  for (auto& b : buckets) {
    if (b.empty()) continue;
    out.orbit_sizes.push_back(static_cast<long>(b.size()));
    out.stabilizer_orders.push_back(static_cast<long>(g.size()) /
                                    static_cast<long>(b.size()));
    out.orbits.push_back(std::move(b));
  }
  return out;
}

SylowComponentReport sylow_component_check(const PermGroup& g,
                                           const NilGraph& graph) {
  SylowComponentReport report;
  const ElementSet& nil = graph.nil_set();
  ComponentOrbits orbits = component_orbits(g, graph);
  std::vector<long> stab_of_component(graph.kappa(), 0);
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
    for (int c : orbits.orbits[o])
      stab_of_component[c] = orbits.stabilizer_orders[o];

  for (int p : prime_divisors(g.size())) {
    // All Sylow p-subgroups as conjugates of one.
    ElementSet syl = sylow(g, p);
    std::set<ElementSet> conjugates;
    for (std::size_t gi = 0; gi < g.size(); ++gi)
      conjugates.insert(conjugate_set(g, syl, static_cast<int>(gi)));

    for (int c = 0; c < graph.kappa(); ++c) {
      std::vector<bool> in_union(g.size(), false);
      for (int i : nil) in_union[i] = true;
      for (int v : graph.components()[c])
        in_union[graph.element_of(v)] = true;
      long union_size =
          static_cast<long>(nil.size() + graph.components()[c].size());

      SylowComponentEntry entry;
      entry.p = p;
      entry.component = c;
      entry.union_size = union_size;
      for (const auto& conj : conjugates) {
        bool inside = true;
        for (int x : conj)
          if (!in_union[x]) {
            inside = false;
            break;
          }
        if (inside) {
          entry.sylow_inside = true;
          break;
        }
      }
      if (entry.sylow_inside) entry.forward_ok = union_size % p == 0;

      long csize = static_cast<long>(graph.components()[c].size());
      if (nil.size() == 1 &&
          std::gcd(csize + 1, stab_of_component[c]) % p == 0) {
        entry.converse_applicable = true;
        // The guaranteed Sylow subgroup must sit inside C u {1}: grow it by
        // ascent from a p-element of the component.
        std::vector<bool> in_c1(g.size(), false);
        in_c1[g.identity_index()] = true;
        int seed = -1;
        for (int v : graph.components()[c]) {
          int e = graph.element_of(v);
          in_c1[e] = true;
          if (seed == -1 && g.order_of(e) == p) seed = e;
        }
        if (seed == -1) {
          entry.converse_ok = false;
        } else {
          ElementSet found = sylow_from(g, p, seed);
          entry.converse_ok = std::all_of(found.begin(), found.end(),
                                          [&](int x) { return in_c1[x]; });
        }
      }
      if (!entry.forward_ok || !entry.converse_ok) report.all_ok = false;
      report.entries.push_back(entry);
    }
  }
  return report;
}

}  // namespace ng
