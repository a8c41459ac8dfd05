#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ng/errors.hpp"
#include "ng/families.hpp"
#include "ng/nilgraph.hpp"

using namespace ng;

namespace {

// Keeps the group alive for the graph's lifetime.
struct Built {
  explicit Built(PermGroup grp, int workers = 1)
      : g(std::move(grp)), nil(g), graph(NilGraph::build(g, nil, workers)) {}
  PermGroup g;
  NilpotencyData nil;
  NilGraph graph;
};

std::vector<int> sizes_desc(const NilGraph& graph) {
  std::vector<int> s = graph.component_sizes();
  std::sort(s.rbegin(), s.rend());
  return s;
}

}  // namespace

TEST_CASE("nilpotent groups are rejected") {
  PermGroup c6 = cyclic(6);
  NilpotencyData nil(c6);
  CHECK_THROWS_AS(NilGraph::build(c6, nil), nilpotent_group_error);
}

TEST_CASE("the S3 graph is one edge plus three isolated vertices") {
  Built b(symmetric(3));
  CHECK(b.graph.vertex_count() == 5);
  CHECK(b.graph.edge_count() == 1);
  CHECK(b.graph.kappa() == 4);
  auto e = b.graph.edges();
  REQUIRE(e.size() == 1);
  // The single edge joins the two 3-cycles.
  CHECK(b.g.element(b.graph.element_of(e[0].first)).order() == 3);
  CHECK(b.g.element(b.graph.element_of(e[0].second)).order() == 3);
  CHECK(b.graph.classify().bipartite);
}

TEST_CASE("component structure of S4 and the dihedral examples") {
  CHECK(sizes_desc(Built(symmetric(4)).graph) ==
        std::vector<int>{15, 2, 2, 2, 2});
  CHECK(Built(dihedral(5)).graph.kappa() == 6);
  CHECK(sizes_desc(Built(dihedral(12)).graph) == std::vector<int>{8, 4, 4, 4});
  CHECK(Built(psl2(3)).graph.kappa() == 5);
}

TEST_CASE("degrees sum to twice the edge count") {
  Built b(symmetric(4));
  long sum = 0;
  for (int v = 0; v < b.graph.vertex_count(); ++v) sum += b.graph.degree(v);
  CHECK(sum == 2 * b.graph.edge_count());
}

TEST_CASE("vertex indexing round trip") {
  Built b(dihedral(6));
  for (int v = 0; v < b.graph.vertex_count(); ++v)
    CHECK(b.graph.vertex_of_element(b.graph.element_of(v)) == v);
  for (int i : b.graph.nil_set()) CHECK(b.graph.vertex_of_element(i) == -1);
}

TEST_CASE("clique numbers") {
  // The largest nilpotent subgroup of S4 is a Sylow 2-subgroup of order 8,
  // whose seven non-identity elements are a maximum clique.
  Built s4(symmetric(4));
  CHECK(s4.graph.clique_number().clique_number == 7);
  CHECK(s4.graph.clique_number().exact);
  CHECK(Built(dihedral(5)).graph.clique_number().clique_number == 4);
  // Tiny budget forces the bounded path; bounds must bracket the truth.
  auto bounded = s4.graph.clique_number(1);
  CHECK_FALSE(bounded.exact);
  CHECK(bounded.bounds.first <= 7);
  CHECK(bounded.bounds.second >= 7);
  CHECK(bounded.bounds.first >= 1);
}

TEST_CASE("classification flags") {
  Classification s4 = Built(symmetric(4)).graph.classify();
  CHECK_FALSE(s4.bipartite);
  CHECK_FALSE(s4.star);
  CHECK_FALSE(s4.eulerian);
  CHECK(s4.self_complementary == SelfComplementary::kNo);
  Classification s3 = Built(symmetric(3)).graph.classify();
  CHECK(s3.bipartite);
  CHECK_FALSE(s3.star);
  CHECK(s3.self_complementary == SelfComplementary::kNo);
}

TEST_CASE("adjacency is identical for any worker count") {
  Built one(symmetric(5), 1);
  Built four(symmetric(5), 4);
  CHECK(one.graph.adjacency() == four.graph.adjacency());
  CHECK(one.graph.export_json("S:5") == four.graph.export_json("S:5"));
  CHECK(one.graph.export_dot() == four.graph.export_dot());
}

TEST_CASE("json export shape") {
  Built b(symmetric(4));
  auto doc = nlohmann::json::parse(b.graph.export_json("S:4"));
  CHECK(doc["group"]["spec"] == "S:4");
  CHECK(doc["group"]["order"] == 24);
  CHECK(doc["group"]["degree"] == 4);
  CHECK(doc["nil_order"] == 1);
  CHECK(doc["vertex_count"] == 23);
  CHECK(doc["vertices"].size() == 23);
  CHECK(doc["kappa"] == 5);
  CHECK(doc["component_sizes"] == nlohmann::json({15, 2, 2, 2, 2}));
  CHECK(doc["components"].size() == 5);
  CHECK(doc["clique_number"] == 7);
  CHECK(doc["clique_bounds"].is_null());
  CHECK(doc["classes"]["self_complementary"] == "no");
  for (const auto& e : doc["edges"]) CHECK(e[0].get<int>() < e[1].get<int>());
}

TEST_CASE("dot export shape") {
  std::string dot = Built(symmetric(3)).graph.export_dot();
  CHECK(dot.rfind("graph nilpotent_graph {", 0) == 0);
  CHECK(dot.find("v0 [label=") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
  CHECK(dot.back() == '\n');
}
