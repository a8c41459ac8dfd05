#include <doctest.h>

#include <algorithm>

#include "ng/families.hpp"
#include "ng/nilgraph.hpp"
#include "ng/structure.hpp"

using namespace ng;

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(24) == std::vector<int>{2, 3});
  CHECK(prime_divisors(660) == std::vector<int>{2, 3, 5, 11});
  CHECK(prime_divisors(7) == std::vector<int>{7});
}

TEST_CASE("sylow subgroups of S4") {
  PermGroup s4 = symmetric(4);
  ElementSet p2 = sylow(s4, 2);
  ElementSet p3 = sylow(s4, 3);
  CHECK(p2.size() == 8);
  CHECK(p3.size() == 3);
  CHECK(is_subgroup(s4, p2));
  CHECK(is_subgroup(s4, p3));
  for (int x : p2) CHECK((8 % s4.order_of(x)) == 0);
  CHECK_THROWS_AS(sylow(s4, 5), std::invalid_argument);
}

TEST_CASE("sylow subgroups of psl2(7)") {
  PermGroup g = psl2(7);  // order 168 = 8 * 3 * 7
  CHECK(sylow(g, 2).size() == 8);
  CHECK(sylow(g, 3).size() == 3);
  CHECK(sylow(g, 7).size() == 7);
}

TEST_CASE("p-cores and the Fitting subgroup") {
  PermGroup s4 = symmetric(4);
  ElementSet o2 = p_core(s4, 2);
  CHECK(o2.size() == 4);  // the Klein subgroup
  for (int x : o2)
    if (x != s4.identity_index())
      CHECK(s4.element(x).cycle_structure().cycle_type ==
            std::vector<int>{2, 2});
  CHECK(p_core(s4, 3) == ElementSet{s4.identity_index()});
  CHECK(fitting(s4).size() == 4);

  PermGroup d5 = dihedral(5);
  CHECK(fitting(d5).size() == 5);  // the rotation subgroup
  PermGroup s3 = symmetric(3);
  CHECK(fitting(s3).size() == 3);
}

TEST_CASE("strongly self-centralizing subgroups of S4 are the four <3-cycle>s") {
  PermGroup s4 = symmetric(4);
  auto ssc = strongly_self_centralizing(s4);
  REQUIRE(ssc.size() == 4);
  for (const auto& u : ssc) {
    CHECK(u.size() == 3);
    int order3 = 0;
    for (int x : u)
      if (s4.order_of(x) == 3) ++order3;
    CHECK(order3 == 2);
  }
  // Each contains a distinct 3-cycle pair: the union covers all 8 of them.
  ElementSet all;
  for (const auto& u : ssc) all.insert(all.end(), u.begin(), u.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  CHECK(all.size() == 9);  // 8 three-cycles + identity
}

TEST_CASE("strongly self-centralizing subgroups of D5") {
  PermGroup d5 = dihedral(5);
  auto ssc = strongly_self_centralizing(d5);
  REQUIRE(ssc.size() == 6);
  int reflections = 0, rotations = 0;
  for (const auto& u : ssc) {
    if (u.size() == 2) ++reflections;
    if (u.size() == 5) ++rotations;
  }
  CHECK(reflections == 5);
  CHECK(rotations == 1);
}

TEST_CASE("cyclic <5-cycle> subgroups are strongly self-centralizing in S5/S6") {
  // A 5-cycle centralizes only its own powers when at most one point is
  // left over: 24/4 = 6 subgroups in S5, 144/4 = 36 in S6.
  CHECK(strongly_self_centralizing(symmetric(5)).size() == 6);
  CHECK(strongly_self_centralizing(symmetric(6)).size() == 36);
}

TEST_CASE("component orbits of psl2(7)") {
  PermGroup g = psl2(7);
  NilpotencyData nil(g);
  NilGraph graph = NilGraph::build(g, nil);
  ComponentOrbits orbits = component_orbits(g, graph);
  std::vector<long> sizes = orbits.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<long>{1, 8, 28});
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
    CHECK(orbits.stabilizer_orders[o] * orbits.orbit_sizes[o] ==
          (long)g.size());
}

TEST_CASE("sylow component conditions hold on small groups") {
  for (const PermGroup& g : {symmetric(4), dihedral(6), psl2(5)}) {
    NilpotencyData nil(g);
    NilGraph graph = NilGraph::build(g, nil);
    CHECK(sylow_component_check(g, graph).all_ok);
  }
}
