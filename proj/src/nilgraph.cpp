#include "ng/nilgraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

#include "ng/errors.hpp"

namespace ng {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Dynamic bitset helpers over raw word spans.
void intersect_into(std::uint64_t* dst, const std::uint64_t* a,
                    const std::uint64_t* b, int words) {
  for (int w = 0; w < words; ++w) dst[w] = a[w] & b[w];
}

bool any(const std::uint64_t* a, int words) {
  for (int w = 0; w < words; ++w)
    if (a[w]) return true;
  return false;
}

int popcount(const std::uint64_t* a, int words) {
  int n = 0;
  for (int w = 0; w < words; ++w) n += std::popcount(a[w]);
  return n;
}

// Exact maximum clique, branch and bound with greedy-coloring bounds.
class CliqueSolver {
public:
  explicit CliqueSolver(const BitMatrix& adj)
      : adj_(adj), n_(adj.size()), words_(adj.words()) {}

  int solve() {
    std::vector<std::uint64_t> all(words_, 0);
    for (int v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t(1) << (v % 64);
    best_ = 0;
    expand(0, all);
    return best_;
  }

private:
  void expand(int depth, const std::vector<std::uint64_t>& candidates) {
    int count = popcount(candidates.data(), words_);
    if (count == 0) {
      best_ = std::max(best_, depth);
      return;
    }
    // Greedy coloring; vertices visited in ascending color so the deepest
    // branches are cut first when iterating from the back.
    std::vector<int> order;
    std::vector<int> color;
    order.reserve(count);
    color.reserve(count);
    std::vector<std::uint64_t> uncolored = candidates;
    int c = 0;
    while (any(uncolored.data(), words_)) {
      ++c;
      std::vector<std::uint64_t> cls = uncolored;
      while (true) {
        int v = first_bit(cls);
        if (v < 0) break;
        clear_bit(cls, v);
        clear_bit(uncolored, v);
        order.push_back(v);
        color.push_back(c);
        for (int w = 0; w < words_; ++w) cls[w] &= ~adj_.row(v)[w];
      }
    }
    std::vector<std::uint64_t> rest = candidates;
    std::vector<std::uint64_t> next(words_);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (depth + color[i] <= best_) return;
      int v = order[i];
      clear_bit(rest, v);
      intersect_into(next.data(), rest.data(), adj_.row(v), words_);
      expand(depth + 1, next);
    }
  }

  int first_bit(const std::vector<std::uint64_t>& bits) const {
    for (int w = 0; w < words_; ++w)
      if (bits[w]) return w * 64 + std::countr_zero(bits[w]);
    return -1;
  }
  static void clear_bit(std::vector<std::uint64_t>& bits, int v) {
    bits[v / 64] &= ~(std::uint64_t(1) << (v % 64));
  }

  const BitMatrix& adj_;
  int n_;
  int words_;
  int best_ = 0;
};

}  // namespace

int BitMatrix::row_popcount(int i) const {
  return popcount(row(i), words_);
}

NilGraph NilGraph::build(const PermGroup& g, NilpotencyData& nil,
                         int workers) {
  NilGraph graph;
  graph.group_ = &g;
  graph.nil_set_ = nil.nil_set();
  if (graph.nil_set_.size() == g.size())
    throw nilpotent_group_error(
        "the nilpotent graph is undefined for a nilpotent group");

  std::vector<bool> in_nil(g.size(), false);
  for (int i : graph.nil_set_) in_nil[i] = true;
  graph.vertex_of_element_.assign(g.size(), -1);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!in_nil[i]) {
      graph.vertex_of_element_[i] = static_cast<int>(graph.vertices_.size());
      graph.vertices_.push_back(static_cast<int>(i));
    }

  int v = graph.vertex_count();
  graph.adj_ = BitMatrix(v);

  // Row-partitioned upper triangle: each worker owns whole rows, so the
  // adjacency is identical for any worker count.
  workers = std::max(1, workers);
  std::atomic<int> next_row{0};
  auto fill_rows = [&]() {
    for (int i = next_row.fetch_add(1); i < v; i = next_row.fetch_add(1)) {
      std::uint64_t* row = graph.adj_.row(i);
      for (int j = i + 1; j < v; ++j) {
        if (nil.pair_nilpotent_uncached(graph.vertices_[i],
                                        graph.vertices_[j]))
          row[j / 64] |= std::uint64_t(1) << (j % 64);
      }
    }
  };
  if (workers == 1) {
    fill_rows();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(fill_rows);
    for (auto& t : pool) t.join();
  }
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (graph.adj_.get(i, j)) graph.adj_.set(j, i);

  // Components by union-find over edges.
  UnionFind uf(v);
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (graph.adj_.get(i, j)) uf.unite(i, j);
  std::vector<std::vector<int>> buckets(v);
  for (int i = 0; i < v; ++i) buckets[uf.find(i)].push_back(i);
  for (auto& b : buckets)
    if (!b.empty()) graph.components_.push_back(std::move(b));
  std::sort(graph.components_.begin(), graph.components_.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.front() < b.front();
            });
  graph.component_of_.assign(v, -1);
  for (std::size_t c = 0; c < graph.components_.size(); ++c) {
    graph.component_sizes_.push_back(
        static_cast<int>(graph.components_[c].size()));
    for (int vertex : graph.components_[c])
      graph.component_of_[vertex] = static_cast<int>(c);
  }
  return graph;
}

int NilGraph::vertex_of_element(int element) const {
  return vertex_of_element_[element];
}

long NilGraph::edge_count() const {
  long total = 0;
  for (int i = 0; i < vertex_count(); ++i) total += degree(i);
  return total / 2;
}

std::vector<std::pair<int, int>> NilGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < vertex_count(); ++i)
    for (int j = i + 1; j < vertex_count(); ++j)
      if (adj_.get(i, j)) out.emplace_back(i, j);
  return out;
}

CliqueResult NilGraph::clique_number(int budget) const {
  CliqueResult result;
  if (vertex_count() == 0) {
    result.clique_number = 0;
    return result;
  }
  if (vertex_count() <= budget) {
    result.clique_number = CliqueSolver(adj_).solve();
    return result;
  }
  // Over budget: explicit greedy lower bound plus coloring upper bound,
  // never a silent approximation.
  result.exact = false;
  int lower = 1;
  std::vector<int> seeds(vertex_count());
  std::iota(seeds.begin(), seeds.end(), 0);
  std::stable_sort(seeds.begin(), seeds.end(),
                   [&](int a, int b) { return degree(a) > degree(b); });
  if (seeds.size() > 64) seeds.resize(64);
  for (int v : seeds) {
    std::vector<int> clique{v};
    for (int u = 0; u < vertex_count(); ++u) {
      bool joins = true;
      for (int c : clique)
        if (u == c || !adj_.get(u, c)) {
          joins = false;
          break;
        }
      if (joins) clique.push_back(u);
    }
    lower = std::max(lower, static_cast<int>(clique.size()));
  }
  std::vector<int> color(vertex_count(), 0);
  int upper = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    std::vector<bool> used(vertex_count() + 1, false);
    for (int u = 0; u < v; ++u)
      if (adj_.get(u, v)) used[color[u]] = true;
    int c = 1;
    while (used[c]) ++c;
    color[v] = c;
    upper = std::max(upper, c);
  }
  result.bounds = {lower, upper};
  return result;
}

Classification NilGraph::classify() const {
  Classification out;
  int v = vertex_count();

  // Bipartite: 2-color every component by BFS.
  out.bipartite = true;
  std::vector<int> color(v, 0);
  for (int start = 0; start < v && out.bipartite; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size() && out.bipartite; ++head) {
      int u = queue[head];
      for (int w = 0; w < v; ++w) {
        if (!adj_.get(u, w)) continue;
        if (color[w] == 0) {
          color[w] = -color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          out.bipartite = false;
          break;
        }
      }
    }
  }

  long edge_total = edge_count();
  int max_degree = 0;
  bool all_even = true;
  for (int u = 0; u < v; ++u) {
    int d = degree(u);
    max_degree = std::max(max_degree, d);
    if (d % 2) all_even = false;
  }
  out.star = v >= 2 && edge_total == v - 1 && max_degree == v - 1;

  if (kappa() != 1) {
    out.eulerian = false;
    out.eulerian_route = "disconnected";
  } else if (!all_even) {
    out.eulerian = false;
    out.eulerian_route = "odd degree";
  } else {
    out.eulerian = true;
  }

  // Self-complementary: edge count filter, then exact search on tiny graphs.
  long complement_pairs = static_cast<long>(v) * (v - 1) / 2;
  if (2 * edge_total != complement_pairs) {
    out.self_complementary = SelfComplementary::kNo;
  } else if (v <= 16) {
    // Backtracking isomorphism between the graph and its complement.
    std::vector<int> map(v, -1);
    std::vector<bool> used(v, false);
    auto consistent = [&](int u, int image) {
      for (int w = 0; w < u; ++w) {
        bool edge = adj_.get(u, w);
        bool comp_edge = !adj_.get(image, map[w]);  // complement adjacency
        if (edge != comp_edge) return false;
      }
      return true;
    };
    std::function<bool(int)> assign = [&](int u) -> bool {
      if (u == v) return true;
      for (int image = 0; image < v; ++image) {
        if (used[image] || !consistent(u, image)) continue;
        used[image] = true;
        map[u] = image;
        if (assign(u + 1)) return true;
        used[image] = false;
        map[u] = -1;
      }
      return false;
    };
    out.self_complementary =
        assign(0) ? SelfComplementary::kYes : SelfComplementary::kNo;
  } else {
    out.self_complementary = SelfComplementary::kUndetermined;
  }
  return out;
}

std::string NilGraph::export_json(const std::string& spec,
                                  int clique_budget) const {
  nlohmann::ordered_json j;
  j["group"] = {{"spec", spec},
                {"order", group_->size()},
                {"degree", group_->degree()}};
  j["nil_order"] = nil_set_.size();
  j["vertex_count"] = vertex_count();
  auto verts = nlohmann::ordered_json::array();
  for (int v = 0; v < vertex_count(); ++v) {
    const Perm& p = group_->element(vertices_[v]);
    verts.push_back({{"id", v}, {"perm", p.cycle_string()}, {"order", p.order()}});
  }
  j["vertices"] = std::move(verts);
  auto edge_list = nlohmann::ordered_json::array();
  for (auto [u, v] : edges()) edge_list.push_back({u, v});
  j["edges"] = std::move(edge_list);
  j["kappa"] = kappa();
  std::vector<int> sizes_desc = component_sizes_;
  std::sort(sizes_desc.rbegin(), sizes_desc.rend());
  j["component_sizes"] = sizes_desc;
  j["components"] = components_;

  CliqueResult clique = clique_number(clique_budget);
  if (clique.exact) {
    j["clique_number"] = clique.clique_number;
    j["clique_bounds"] = nullptr;
  } else {
    j["clique_number"] = nullptr;
    j["clique_bounds"] = {clique.bounds.first, clique.bounds.second};
  }

  Classification cls = classify();
  const char* sc = cls.self_complementary == SelfComplementary::kNo
                       ? "no"
                       : cls.self_complementary == SelfComplementary::kYes
                             ? "yes"
                             : "undetermined";
  j["classes"] = {{"bipartite", cls.bipartite},
                  {"star", cls.star},
                  {"eulerian", cls.eulerian},
                  {"self_complementary", sc}};
  return j.dump(2) + "\n";
}

std::string NilGraph::export_dot() const {
  std::string out = "graph nilpotent_graph {\n";
  for (int v = 0; v < vertex_count(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" +
           group_->element(vertices_[v]).cycle_string() + "\"];\n";
  }
  for (auto [u, v] : edges())
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ng
