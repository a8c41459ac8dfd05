#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ng {

struct CycleStructure {
  std::vector<std::vector<int>> cycles;  // nontrivial cycles, 0-indexed
  std::vector<int> support;              // moved points, ascending
  std::vector<int> fixed;                // fixed points, ascending
  std::vector<int> cycle_type;           // nontrivial cycle lengths, ascending
};

/// A bijection of {0..degree-1}. Immutable after construction.
class Perm {
public:
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);

  // Cycles are 0-indexed; points absent from every cycle are fixed.
  static Perm from_cycles(int degree,
                          const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;  // lcm of cycle lengths
  CycleStructure cycle_structure() const;

  // 1-indexed cycle notation, e.g. "(1 2 3)(4 5)"; identity is "()".
  std::string cycle_string() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;  // canonical order

private:
  std::vector<int> images_;
};

// compose(p, q)(x) = p(q(x)): the right factor acts first.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace ng
