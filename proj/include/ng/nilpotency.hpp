#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ng/group.hpp"

namespace ng {

// Nilpotency of a closed element set by the coprime-order commuting
// criterion: a finite group is nilpotent iff any two elements of coprime
// order commute.
bool is_nilpotent_set(const std::vector<Perm>& elements);

// Independent oracle: lower central series gamma_1 = H,
// gamma_{i+1} = <[a,b] : a in gamma_i, b in H>, nilpotent iff the chain
// reaches the trivial group.
bool is_nilpotent_lcs(const std::vector<Perm>& elements);

/// Per-group nilpotency state: element orders, the pairwise <x,y>-nilpotent
/// test with its memo cache, nil(G) and the hypercenter chain.
///
/// pair_nilpotent may be called concurrently only through disjoint use of
/// pair_nilpotent_uncached; the cached entry points are single-threaded.
class NilpotencyData {
public:
  explicit NilpotencyData(const PermGroup& g);

  const PermGroup& group() const { return *group_; }

  // True iff <x,y> is nilpotent. Fast paths: commuting pairs are nilpotent;
  // non-commuting pairs of coprime order are not. Otherwise closes <x,y>
  // with an early abort on the first coprime-order non-commuting pair.
  bool pair_nilpotent(int x, int y);            // memoized
  bool pair_nilpotent_uncached(int x, int y) const;  // thread-safe

  ElementSet nilpotentizer(int x);

  // nil(G): intersection of all nilpotentizers. Asserted equal to the
  // hypercenter (a finite-group identity).
  const ElementSet& nil_set();

  const ElementSet& hypercenter();
  const std::vector<ElementSet>& zeta_chain();

  bool group_is_nilpotent();

  std::size_t cache_size() const { return pair_cache_.size(); }

private:
  static std::uint64_t pair_key(int x, int y);
  void compute_hypercenter();
  void compute_nil();

  const PermGroup* group_;
  std::unordered_map<std::uint64_t, bool> pair_cache_;
  std::vector<ElementSet> zeta_chain_;
  ElementSet hypercenter_;
  ElementSet nil_;
  bool have_hypercenter_ = false;
  bool have_nil_ = false;
};

}  // namespace ng
