#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ng/group.hpp"
#include "ng/nilpotency.hpp"

namespace ng {

/// Square symmetric bit matrix with 64-bit row words.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

  int size() const { return n_; }
  bool get(int i, int j) const {
    return (bits_[std::size_t(i) * words_ + j / 64] >> (j % 64)) & 1;
  }
  void set(int i, int j) {
    bits_[std::size_t(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
  }
  const std::uint64_t* row(int i) const { return bits_.data() + std::size_t(i) * words_; }
  std::uint64_t* row(int i) { return bits_.data() + std::size_t(i) * words_; }
  int words() const { return words_; }
  int row_popcount(int i) const;

  bool operator==(const BitMatrix&) const = default;

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct CliqueResult {
  bool exact = true;
  int clique_number = 0;               // valid when exact
  std::pair<int, int> bounds{0, 0};    // (lower, upper), valid when !exact
};

enum class SelfComplementary { kNo, kUndetermined, kYes };

struct Classification {
  bool bipartite = false;
  bool star = false;
  bool eulerian = false;
  SelfComplementary self_complementary = SelfComplementary::kUndetermined;
  std::string eulerian_route;  // which argument decided non-Eulerian
};

inline constexpr int kDefaultCliqueBudget = 2000;

/// The nilpotent graph: vertices are G - nil(G) in canonical element order,
/// an edge joins two vertices iff they generate a nilpotent subgroup.
/// Immutable once built.
class NilGraph {
public:
  // Throws nilpotent_group_error when nil(G) = G. Worker count >= 1; the
  // adjacency is identical for any worker count.
  static NilGraph build(const PermGroup& g, NilpotencyData& nil,
                        int workers = 1);

  const PermGroup& group() const { return *group_; }
  const ElementSet& nil_set() const { return nil_set_; }
  const std::vector<int>& vertices() const { return vertices_; }  // element indices
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int element_of(int vertex) const { return vertices_[vertex]; }
  int vertex_of_element(int element) const;  // -1 when element is in nil(G)

  const BitMatrix& adjacency() const { return adj_; }
  bool adjacent(int u, int v) const { return adj_.get(u, v); }
  int degree(int v) const { return adj_.row_popcount(v); }
  long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

  int kappa() const { return static_cast<int>(components_.size()); }
  // Each component sorted ascending; the list sorted by (size, least vertex).
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<int>& component_sizes() const { return component_sizes_; }
  int component_of(int vertex) const { return component_of_[vertex]; }

  CliqueResult clique_number(int budget = kDefaultCliqueBudget) const;
  Classification classify() const;

  // Byte-deterministic exports; spec is the group-spec string echoed in the
  // JSON envelope.
  std::string export_json(const std::string& spec,
                          int clique_budget = kDefaultCliqueBudget) const;
  std::string export_dot() const;

private:
  const PermGroup* group_ = nullptr;
  ElementSet nil_set_;
  std::vector<int> vertices_;
  std::vector<int> vertex_of_element_;
  BitMatrix adj_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_sizes_;
  std::vector<int> component_of_;
};

}  // namespace ng
