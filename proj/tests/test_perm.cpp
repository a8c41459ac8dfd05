#include <doctest.h>

#include "ng/perm.hpp"

using ng::Perm;

TEST_CASE("identity and construction") {
  Perm id(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);
  CHECK(id.cycle_string() == "()");
  for (int i = 0; i < 4; ++i) CHECK(id(i) == i);
}

TEST_CASE("composition applies the right factor first") {
  // p = (0 1), q = (1 2); p(q(1)) = p(2) = 2, q(p(1)) = q(0) = 0.
  Perm p = Perm::from_cycles(3, {{0, 1}});
  Perm q = Perm::from_cycles(3, {{1, 2}});
  CHECK(compose(p, q)(1) == 2);
  CHECK(compose(q, p)(1) == 0);
  CHECK((p * q) == compose(p, q));
  // (0 1)(1 2) = (0 1 2) right-first: q fixes 0 then p sends it to 1;
  // 1 -> 2 -> 2; 2 -> 1 -> 0.
  CHECK(compose(p, q) == Perm::from_cycles(3, {{0, 1, 2}}));
}

TEST_CASE("inverse and order") {
  Perm c = Perm::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(c.order() == 6);
  CHECK((c * c.inverse()).is_identity());
  CHECK((c.inverse() * c).is_identity());
  CHECK(Perm(5).order() == 1);
  CHECK(Perm::from_cycles(5, {{0, 1, 2, 3, 4}}).order() == 5);
}

TEST_CASE("cycle structure and 1-indexed notation") {
  Perm c = Perm::from_cycles(6, {{0, 1, 2}, {3, 4}});
  auto cs = c.cycle_structure();
  CHECK(cs.cycles.size() == 2);
  CHECK(cs.support == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(cs.fixed == std::vector<int>{5});
  CHECK(cs.cycle_type == std::vector<int>{2, 3});
  CHECK(c.cycle_string() == "(1 2 3)(4 5)");
}

TEST_CASE("canonical ordering puts the identity first") {
  Perm id(4);
  Perm t = Perm::from_cycles(4, {{2, 3}});
  Perm s = Perm::from_cycles(4, {{0, 1}});
  CHECK(id < t);
  CHECK(id < s);
  CHECK(t < s);  // images 0123 -> 0132 sorts before 1023
}
