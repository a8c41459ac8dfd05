#pragma once

#include <vector>

namespace ng {

// Element of GF(p^f) in the polynomial basis: coefficient i multiplies x^i,
// entries reduced mod p, length f.
using FieldElement = std::vector<int>;

bool is_prime(long n);

/// GF(p^f) with a deterministic modulus: the lexicographically smallest monic
/// irreducible of degree f, coefficients compared low-degree-first. For f = 1
/// the modulus is x.
class FiniteField {
public:
  FiniteField(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }
  // Monic, length f+1, low-degree-first.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(f_, 0); }
  FieldElement one() const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // throws on zero

  bool is_zero(const FieldElement& a) const;

  // Canonical enumeration: element k has coefficients = base-p digits of k,
  // so 0, 1, ..., p-1 come first.
  FieldElement from_index(long k) const;
  long to_index(const FieldElement& a) const;
  std::vector<FieldElement> enumerate() const;

  long multiplicative_order(const FieldElement& a) const;
  // Least element (by canonical order) of multiplicative order q-1.
  FieldElement primitive_element() const;

private:
  int p_;
  int f_;
  long q_;
  std::vector<int> modulus_;
};

}  // namespace ng
