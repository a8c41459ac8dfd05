#pragma once

#include <map>
#include <vector>

#include "ng/group.hpp"
#include "ng/nilgraph.hpp"

namespace ng {

std::vector<int> prime_divisors(std::size_t n);

// A Sylow p-subgroup by deterministic normalizer ascent from the canonically
// least element of order p. Throws if p does not divide |G|.
ElementSet sylow(const PermGroup& g, int p);

// Same ascent, but seeded with a given p-element (index into g).
ElementSet sylow_from(const PermGroup& g, int p, int seed);

// O_p(G): intersection of all conjugates of one Sylow p-subgroup.
ElementSet p_core(const PermGroup& g, int p);

// F(G): closure of the union of the p-cores.
ElementSet fitting(const PermGroup& g);

// All strongly self-centralizing subgroups: U with C_G(x) = U for every
// non-identity x in U. Scan over centralizers is complete because any such
// U is the centralizer of each of its non-identity elements.
std::vector<ElementSet> strongly_self_centralizing(const PermGroup& g);

struct ComponentOrbits {
  std::vector<std::vector<int>> orbits;  // component indices, each sorted
  std::vector<long> orbit_sizes;
  std::vector<long> stabilizer_orders;   // |N_G(C)| = |G| / orbit size
};

// Orbits of the conjugation action of G on the connected components.
ComponentOrbits component_orbits(const PermGroup& g, const NilGraph& graph);

struct SylowComponentEntry {
  int p = 0;
  int component = 0;
  bool sylow_inside = false;   // some Sylow p-subgroup within C u Z*(G)
  long union_size = 0;         // |C u Z*(G)|
  bool forward_ok = true;      // sylow inside => p | |C u Z*(G)|
  bool converse_applicable = false;  // Z* = 1 and p | gcd(|C|+1, |N_G(C)|)
  bool converse_ok = true;     // applicable => Sylow p-subgroup in C u {1}
};

struct SylowComponentReport {
  std::vector<SylowComponentEntry> entries;
  bool all_ok = true;
};

SylowComponentReport sylow_component_check(const PermGroup& g,
                                           const NilGraph& graph);

}  // namespace ng
