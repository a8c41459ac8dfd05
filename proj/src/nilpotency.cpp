#include "ng/nilpotency.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ng/errors.hpp"

namespace ng {

bool is_nilpotent_set(const std::vector<Perm>& elements) {
  std::vector<int> orders;
  orders.reserve(elements.size());
  for (const auto& e : elements) orders.push_back(e.order());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (std::gcd(orders[i], orders[j]) != 1) continue;
      if (compose(elements[i], elements[j]) !=
          compose(elements[j], elements[i]))
        return false;
    }
  return true;
}

bool is_nilpotent_lcs(const std::vector<Perm>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty element set");
  int degree = elements.front().degree();
  std::vector<Perm> gamma = elements;
  std::sort(gamma.begin(), gamma.end());
  while (true) {
    if (gamma.size() == 1) return true;
    std::vector<Perm> comms;
    for (const auto& a : gamma) {
      Perm ai = a.inverse();
      for (const auto& b : elements) {
        Perm comm = compose(compose(ai, b.inverse()), compose(a, b));
        comms.push_back(std::move(comm));
      }
    }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    std::vector<Perm> next = closure(degree, comms).elements;
    if (next == gamma) return false;  // stabilized above the trivial group
    gamma = std::move(next);
  }
}

NilpotencyData::NilpotencyData(const PermGroup& g) : group_(&g) {}

std::uint64_t NilpotencyData::pair_key(int x, int y) {
  auto lo = static_cast<std::uint64_t>(std::min(x, y));
  auto hi = static_cast<std::uint64_t>(std::max(x, y));
  return (hi << 32) | lo;
}

bool NilpotencyData::pair_nilpotent(int x, int y) {
  std::uint64_t key = pair_key(x, y);
  auto it = pair_cache_.find(key);
  if (it != pair_cache_.end()) return it->second;
  bool value = pair_nilpotent_uncached(x, y);
  pair_cache_.emplace(key, value);
  return value;
}

bool NilpotencyData::pair_nilpotent_uncached(int x, int y) const {
  const PermGroup& g = *group_;
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= g.size() ||
      static_cast<std::size_t>(y) >= g.size())
    throw membership_error("pair_nilpotent: element index out of range");

  if (x == y || x == g.identity_index() || y == g.identity_index())
    return true;  // cyclic
  bool commute = g.commute(x, y);
  if (commute) return true;  // abelian closure
  if (std::gcd(g.order_of(x), g.order_of(y)) == 1) return false;

  // Close <x,y> by left multiplication, aborting as soon as the partial set
  // holds a non-commuting pair of coprime orders. Most non-edges die long
  // before the subgroup is fully enumerated.
  //
  // Stamped scratch avoids clearing an O(|G|) visited array on every call.
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t generation = 0;
  thread_local std::vector<int> added;
  if (stamp.size() < g.size() || generation == 0xffffffffu) {
    stamp.assign(g.size(), 0);
    generation = 0;
  }
  ++generation;

  const int mults[4] = {x, y, g.inv(x), g.inv(y)};
  added.clear();
  added.push_back(g.identity_index());
  stamp[g.identity_index()] = generation;
  for (std::size_t head = 0; head < added.size(); ++head) {
    int w = added[head];
    for (int m : mults) {
      int z = g.mul(m, w);
      if (stamp[z] == generation) continue;
      int oz = g.order_of(z);
      for (int prev : added) {
        if (std::gcd(oz, g.order_of(prev)) != 1) continue;
        if (!g.commute(z, prev)) return false;
      }
      stamp[z] = generation;
      added.push_back(z);
    }
  }
  // Every coprime-order pair was checked on insertion, so the completed
  // closure satisfies the criterion.
  return true;
}

ElementSet NilpotencyData::nilpotentizer(int x) {
  ElementSet out;
  for (std::size_t i = 0; i < group_->size(); ++i)
    if (pair_nilpotent(static_cast<int>(i), x))
      out.push_back(static_cast<int>(i));
  return out;
}

void NilpotencyData::compute_hypercenter() {
  if (have_hypercenter_) return;
  const PermGroup& g = *group_;
  zeta_chain_.clear();
  zeta_chain_.push_back({g.identity_index()});
  while (true) {
    const ElementSet& prev = zeta_chain_.back();
    std::vector<bool> in_prev(g.size(), false);
    for (int i : prev) in_prev[i] = true;
    ElementSet next;
    for (std::size_t x = 0; x < g.size(); ++x) {
      bool central = true;
      for (std::size_t h = 0; h < g.size(); ++h) {
        // [x,h] = x^-1 h^-1 x h
        int comm = g.mul(g.mul(g.inv(static_cast<int>(x)),
                               g.inv(static_cast<int>(h))),
                         g.mul(static_cast<int>(x), static_cast<int>(h)));
        if (!in_prev[comm]) {
          central = false;
          break;
        }
      }
      if (central) next.push_back(static_cast<int>(x));
    }
    if (next == prev) break;
    zeta_chain_.push_back(std::move(next));
  }
  hypercenter_ = zeta_chain_.back();
  have_hypercenter_ = true;
}

void NilpotencyData::compute_nil() {
  if (have_nil_) return;
  const PermGroup& g = *group_;
  std::vector<int> candidates(g.size());
  std::iota(candidates.begin(), candidates.end(), 0);
  for (std::size_t h = 0; h < g.size() && candidates.size() > 1; ++h) {
    std::erase_if(candidates, [&](int x) {
      return !pair_nilpotent(x, static_cast<int>(h));
    });
  }
  nil_ = std::move(candidates);

  compute_hypercenter();
  if (nil_ != hypercenter_)
    throw std::logic_error("nil(G) != Z*(G): finite-group identity violated");
  have_nil_ = true;
}

const ElementSet& NilpotencyData::nil_set() {
  compute_nil();
  return nil_;
}

const ElementSet& NilpotencyData::hypercenter() {
  compute_hypercenter();
  return hypercenter_;
}

const std::vector<ElementSet>& NilpotencyData::zeta_chain() {
  compute_hypercenter();
  return zeta_chain_;
}

bool NilpotencyData::group_is_nilpotent() {
  return hypercenter().size() == group_->size();
}

}  // namespace ng
