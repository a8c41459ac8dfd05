#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ng/perm.hpp"

namespace ng {

// Sorted element indices relative to one PermGroup.
using ElementSet = std::vector<int>;

inline constexpr std::size_t kDefaultMaxOrder = 10080;

struct ClosureResult {
  std::vector<Perm> elements;  // sorted canonically
  bool aborted = false;
};

// Breadth-first closure of <gens> under composition. The visitor (if any)
// is called on each element as it is discovered; returning false stops the
// closure and the partial set is returned with aborted = true. max_order of
// zero means unlimited.
ClosureResult closure(int degree, const std::vector<Perm>& gens,
                      const std::function<bool(const Perm&)>& visitor = nullptr,
                      std::size_t max_order = 0);

/// A fully enumerated finite permutation group. Elements are kept in
/// canonical (lexicographic-by-images) order, so element indices are stable
/// across runs. Immutable after construction and safe to share between
/// threads.
class PermGroup {
public:
  static PermGroup generated(int degree, std::vector<Perm> gens,
                             std::size_t max_order = kDefaultMaxOrder);

  // For sets already known to be closed (coset images, direct products).
  static PermGroup from_elements(int degree, std::vector<Perm> gens,
                                 std::vector<Perm> elements);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(int i) const { return elements_[i]; }

  std::optional<int> find(const Perm& p) const;
  int index_of(const Perm& p) const;  // throws membership_error
  bool contains(const Perm& p) const { return find(p).has_value(); }
  int identity_index() const { return identity_; }

  // Index-level arithmetic.
  int mul(int a, int b) const;  // index of element(a) * element(b)
  int inv(int a) const { return inverse_[a]; }
  int order_of(int a) const { return order_[a]; }
  bool commute(int a, int b) const;
  int conj(int s, int g) const;  // index of g s g^-1

private:
  PermGroup() = default;
  void finalize();

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inverse_;
  std::vector<int> order_;
  int identity_ = 0;
};

// Closure inside a group, on element indices.
ElementSet subgroup_closure(const PermGroup& g, const ElementSet& seed);

bool is_subgroup(const PermGroup& g, const ElementSet& s);
bool is_normal(const PermGroup& g, const ElementSet& s);
bool is_abelian(const PermGroup& g);
bool is_abelian_set(const PermGroup& g, const ElementSet& s);

ElementSet centralizer(const PermGroup& g, int x);
ElementSet center(const PermGroup& g);
ElementSet normalizer(const PermGroup& g, const ElementSet& s);
ElementSet conjugate_set(const PermGroup& g, const ElementSet& s, int conjugator);

// Image of g acting by left multiplication on the left cosets of the normal
// subgroup n. The identity coset is point 0; the remaining cosets are ordered
// by their least element. Throws membership_error if n is not a normal
// subgroup.
PermGroup coset_action(const PermGroup& g, const ElementSet& n);

// g acts on the first degree(g) points, h on the rest.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

// The subgroup s of g as an abstract group: left multiplication on its own
// |s| elements, points following the canonical order of s (identity at 0).
PermGroup regular_representation(const PermGroup& g, const ElementSet& s);

}  // namespace ng
