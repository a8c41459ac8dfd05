#include <doctest.h>

#include <stdexcept>

#include "ng/gf.hpp"

using namespace ng;

namespace {

// Exhaustive field-axiom sweep; cubic in q, keep q small.
void check_axioms(int p, int f) {
  FiniteField k(p, f);
  auto all = k.enumerate();
  long q = k.q();
  REQUIRE((long)all.size() == q);

  for (const auto& a : all) {
    CHECK(k.add(a, k.zero()) == a);
    CHECK(k.mul(a, k.one()) == a);
    CHECK(k.is_zero(k.add(a, k.neg(a))));
    if (!k.is_zero(a)) {
      CHECK(k.mul(a, k.inv(a)) == k.one());
      CHECK((q - 1) % k.multiplicative_order(a) == 0);
    }
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(k.add(a, b) == k.add(b, a));
      CHECK(k.mul(a, b) == k.mul(b, a));
      CHECK(k.sub(a, b) == k.add(a, k.neg(b)));
    }
  // Distributivity and associativity on a coarse grid to stay subcubic
  // for the larger fields.
  long step = q <= 9 ? 1 : 3;
  for (long i = 0; i < q; i += step)
    for (long j = 0; j < q; j += step)
      for (long l = 0; l < q; l += step) {
        auto a = k.from_index(i), b = k.from_index(j), c = k.from_index(l);
        CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
        CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
      }
}

// x -> x^p term by term via repeated multiplication.
FieldElement frobenius(const FiniteField& k, const FieldElement& a) {
  FieldElement r = k.one();
  for (int i = 0; i < k.p(); ++i) r = k.mul(r, a);
  return r;
}

}  // namespace

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("field axioms for small fields") {
  check_axioms(2, 1);
  check_axioms(3, 1);
  check_axioms(2, 2);
  check_axioms(5, 1);
  check_axioms(7, 1);
  check_axioms(2, 3);
  check_axioms(3, 2);
  check_axioms(13, 1);
}

TEST_CASE("canonical moduli") {
  // Smallest monic irreducibles, low-degree-first coefficients.
  CHECK(FiniteField(2, 2).modulus() == std::vector<int>{1, 1, 1});  // x^2+x+1
  CHECK(FiniteField(3, 2).modulus() == std::vector<int>{1, 0, 1});  // x^2+1
  // Low-degree-first comparison ranks x^3+x^2+1 below x^3+x+1.
  CHECK(FiniteField(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
  CHECK(FiniteField(5, 1).modulus() == std::vector<int>{0, 1});  // x
}

TEST_CASE("frobenius is additive") {
  for (auto [p, f] : {std::pair{2, 3}, std::pair{3, 2}}) {
    FiniteField k(p, f);
    for (const auto& a : k.enumerate())
      for (const auto& b : k.enumerate())
        CHECK(frobenius(k, k.add(a, b)) ==
              k.add(frobenius(k, a), frobenius(k, b)));
  }
}

TEST_CASE("index round trip and enumeration order") {
  FiniteField k(3, 2);
  for (long i = 0; i < k.q(); ++i) CHECK(k.to_index(k.from_index(i)) == i);
  CHECK(k.from_index(0) == k.zero());
  CHECK(k.from_index(1) == k.one());
}

TEST_CASE("primitive element generates the unit group") {
  for (auto [p, f] : {std::pair{7, 1}, std::pair{2, 3}, std::pair{3, 2}}) {
    FiniteField k(p, f);
    CHECK(k.multiplicative_order(k.primitive_element()) == k.q() - 1);
  }
}

TEST_CASE("inverse of zero is rejected") {
  FiniteField k(5, 1);
  CHECK_THROWS_AS(k.inv(k.zero()), std::invalid_argument);
}
