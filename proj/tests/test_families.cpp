#include <doctest.h>

#include "ng/errors.hpp"
#include "ng/families.hpp"
#include "ng/group.hpp"

using namespace ng;

TEST_CASE("family orders") {
  CHECK(symmetric(3).size() == 6);
  CHECK(symmetric(5).size() == 120);
  CHECK(dihedral(5).size() == 10);
  CHECK(dihedral(12).size() == 24);
  CHECK(cyclic(1).size() == 1);
  CHECK(cyclic(7).size() == 7);
}

TEST_CASE("cyclic group generator count") {
  PermGroup c6 = cyclic(6);
  int of_order_6 = 0;
  for (int i = 0; i < (int)c6.size(); ++i)
    if (c6.order_of(i) == 6) ++of_order_6;
  CHECK(of_order_6 == 2);  // phi(6)
}

TEST_CASE("dihedral relations") {
  PermGroup d7 = dihedral(7);
  const Perm& rot = d7.generators()[0];
  const Perm& refl = d7.generators()[1];
  CHECK(rot.order() == 7);
  CHECK(refl.order() == 2);
  CHECK(refl * rot * refl == rot.inverse());
}

TEST_CASE("psl2 parameters") {
  PslParameters p9 = PslParameters::of(9);
  CHECK(p9.p == 3);
  CHECK(p9.f == 2);
  CHECK(p9.k == 2);
  CHECK(p9.r == 4);
  CHECK(p9.t == 5);
  PslParameters p8 = PslParameters::of(8);
  CHECK(p8.k == 1);
  CHECK(p8.r == 7);
  CHECK(p8.t == 9);
  CHECK_THROWS_AS(PslParameters::of(6), std::invalid_argument);
  CHECK_THROWS_AS(PslParameters::of(1), std::invalid_argument);
}

TEST_CASE("psl2 orders match q(q^2-1)/gcd(2,q-1)") {
  CHECK(psl2(2).size() == 6);
  CHECK(psl2(3).size() == 12);
  CHECK(psl2(4).size() == 60);
  CHECK(psl2(5).size() == 60);
  CHECK(psl2(7).size() == 168);
  CHECK(psl2(9).size() == 360);
}

TEST_CASE("psl2(2) is the nonabelian group of order 6") {
  PermGroup g = psl2(2);
  CHECK(g.size() == 6);
  CHECK_FALSE(is_abelian(g));
  CHECK(g.degree() == 3);  // projective line over GF(2)
}

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("S:4").size() == 24);
  CHECK(parse_group_spec("D:5").size() == 10);
  CHECK(parse_group_spec("C:9").size() == 9);
  CHECK(parse_group_spec("PSL2:3").size() == 12);
  CHECK(parse_group_spec("S:3xC:2").size() == 12);
  CHECK(parse_group_spec(" S:3 x C:2 x C:2 ").size() == 24);
}

TEST_CASE("group spec errors carry positions") {
  CHECK_THROWS_AS(parse_group_spec("Q:3"), spec_parse_error);
  CHECK_THROWS_AS(parse_group_spec("S:"), spec_parse_error);
  CHECK_THROWS_AS(parse_group_spec("S:3yC:2"), spec_parse_error);
  CHECK_THROWS_AS(parse_group_spec(""), spec_parse_error);
  CHECK_THROWS_AS(parse_group_spec("S4"), spec_parse_error);
  try {
    parse_group_spec("S:3yC:2");
  } catch (const spec_parse_error& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("enumeration budgets") {
  CHECK_THROWS_AS(symmetric(8), budget_error);
  CHECK_THROWS_AS(parse_group_spec("S:8"), budget_error);
  CHECK_THROWS_AS(parse_group_spec("S:6xS:5"), budget_error);
  CHECK(parse_group_spec("S:7").size() == 5040);
}
