#pragma once

#include <string>

#include "ng/group.hpp"

namespace ng {

struct PslParameters {
  long q;  // = p^f
  int p;
  int f;
  int k;   // gcd(q-1, 2)
  long r;  // (q-1)/k
  long t;  // (q+1)/k

  static PslParameters of(long q);  // throws if q is not a prime power >= 2
};

PermGroup symmetric(int n, std::size_t max_order = kDefaultMaxOrder);
PermGroup dihedral(int n, std::size_t max_order = kDefaultMaxOrder);  // n >= 3
PermGroup cyclic(int n, std::size_t max_order = kDefaultMaxOrder);

// PSL(2,q) acting on the projective line: points 0..q-1 are the field
// elements in canonical order, point q is infinity. Generated by x -> x+1,
// x -> a^2 x (a primitive) and x -> -1/x. The closure size is checked
// against q(q^2-1)/gcd(2,q-1); a mismatch is a hard failure.
PermGroup psl2(long q, std::size_t max_order = kDefaultMaxOrder);

// Grammar: Atom ( "x" Atom )* with Atom in {S:n, D:n, C:n, PSL2:q};
// whitespace optional. Folds with direct_product left-associatively.
PermGroup parse_group_spec(const std::string& text,
                           std::size_t max_order = kDefaultMaxOrder);

}  // namespace ng
