#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "chromatic/graph.hpp"
#include "test_util.hpp"

using chromatic::canonical_key;
using chromatic::Edge;
using chromatic::Family;
using chromatic::Graph;
using chromatic::Partition;

namespace {
// the running example: triangle 1,2,4 with pendant edge 2-3
const Graph gstar(4, {{1, 2}, {1, 4}, {2, 4}, {2, 3}});
}  // namespace

TEST_CASE("graph construction") {
  REQUIRE(gstar.vertex_count() == 4);
  REQUIRE(gstar.edge_count() == 4);
  REQUIRE(gstar.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {2, 4}});

  REQUIRE(Graph(3, {}).edge_count() == 0);
  REQUIRE(Graph(4, {{2, 1}, {1, 2}}).edges() == std::vector<Edge>{{1, 2}});

  REQUIRE_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(3, {{0, 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("deletion") {
  Graph del = gstar.delete_edge(Edge(2, 4));
  REQUIRE(del.vertex_count() == 4);
  REQUIRE(del.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}});

  Graph k2(2, {{1, 2}});
  REQUIRE(k2.delete_edge(Edge(1, 2)).edge_count() == 0);

  Graph c4 = family(Family::cycle, 4);
  REQUIRE(is_isomorphic(c4.delete_edge(Edge(1, 2)), family(Family::path, 4)));

  REQUIRE_THROWS_AS(gstar.delete_edge(Edge(1, 3)), std::invalid_argument);

  SECTION("re-adding the deleted edge restores the graph") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = chromatic::random_graph(2 + (int)(rng() % 6), 0.6, rng());
      if (g.edge_count() == 0) continue;
      Edge e = g.edges()[rng() % g.edge_count()];
      Graph del2 = g.delete_edge(e);
      std::vector<std::pair<int, int>> back;
      for (Edge f : del2.edges()) back.emplace_back(f.u, f.v);
      back.emplace_back(e.u, e.v);
      REQUIRE(Graph(g.vertex_count(), back) == g);
    }
  }
}

TEST_CASE("contraction") {
  Graph con = gstar.contract_edge(Edge(2, 4));
  REQUIRE(con.vertex_count() == 3);
  REQUIRE(con.edges() == std::vector<Edge>{{1, 2}, {2, 3}});

  Graph k2(2, {{1, 2}});
  Graph single = k2.contract_edge(Edge(1, 2));
  REQUIRE(single.vertex_count() == 1);
  REQUIRE(single.edge_count() == 0);

  Graph c4 = family(Family::cycle, 4);
  REQUIRE(is_isomorphic(c4.contract_edge(Edge(1, 2)),
                        family(Family::complete, 3)));

  REQUIRE_THROWS_AS(gstar.contract_edge(Edge(3, 4)), std::invalid_argument);

  SECTION("vertex and edge counts") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = chromatic::random_graph(2 + (int)(rng() % 6), 0.6, rng());
      if (g.edge_count() == 0) continue;
      Edge e = g.edges()[rng() % g.edge_count()];
      Graph con2 = g.contract_edge(e);
      REQUIRE(con2.vertex_count() == g.vertex_count() - 1);
      REQUIRE(con2.edge_count() <= g.edge_count() - 1);
    }
  }
}

TEST_CASE("components") {
  Graph f(4, {{1, 2}, {2, 4}});
  auto info = f.components();
  REQUIRE(info.shape == Partition({3, 1}));
  REQUIRE(info.blocks == std::vector<std::vector<int>>{{1, 2, 4}, {3}});

  auto edgeless = Graph::edgeless(5).components();
  REQUIRE(edgeless.shape == Partition({1, 1, 1, 1, 1}));
  REQUIRE(edgeless.blocks.size() == 5);

  REQUIRE(gstar.components().shape == Partition({4}));

  SECTION("a forest with k edges has n-k components") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      Graph g = chromatic::random_graph(1 + (int)(rng() % 7), 0.3, rng());
      if (!g.is_forest()) continue;
      REQUIRE((int)g.components().blocks.size() ==
              g.vertex_count() - g.edge_count());
    }
  }
}

TEST_CASE("simple cycles") {
  auto cycles = gstar.simple_cycles();
  REQUIRE(cycles == std::vector<std::vector<Edge>>{{{1, 2}, {1, 4}, {2, 4}}});

  REQUIRE(family(Family::path, 5).simple_cycles().empty());
  REQUIRE(Graph::edgeless(3).simple_cycles().empty());

  // K4: four triangles and three 4-cycles
  REQUIRE(family(Family::complete, 4).simple_cycles().size() == 7);
  REQUIRE(family(Family::cycle, 5).simple_cycles().size() == 1);

  SECTION("no cycles exactly on forests") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
      Graph g = chromatic::random_graph(1 + (int)(rng() % 6), 0.4, rng());
      // test-local acyclicity check
      chromatic::detail::Dsu dsu(g.vertex_count());
      bool acyclic = true;
      for (Edge e : g.edges())
        if (!dsu.unite(e.u, e.v)) acyclic = false;
      REQUIRE(g.simple_cycles().empty() == acyclic);
      REQUIRE(g.is_forest() == acyclic);
    }
  }
}

TEST_CASE("isomorphism") {
  Graph f(4, {{1, 2}, {2, 4}});
  Graph f_prime(4, {{1, 4}, {2, 4}});
  REQUIRE(is_isomorphic(f, f_prime));
  REQUIRE(is_isomorphic(gstar, gstar));

  Graph p4 = family(Family::path, 4);
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  REQUIRE_FALSE(is_isomorphic(p4, star));
  REQUIRE_FALSE(is_isomorphic(p4, family(Family::path, 5)));

  SECTION("canonical key is invariant under relabeling") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + (int)(rng() % 8);
      Graph g = chromatic::random_graph(n, 0.5, rng());
      std::vector<int> perm(n + 1);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = n; i > 1; --i) std::swap(perm[i], perm[1 + rng() % i]);
      REQUIRE(canonical_key(testutil::relabel(g, perm)) == canonical_key(g));
    }
  }
  SECTION("keys separate the classes found by brute force") {
    // all graphs on 4 vertices: canonical keys must induce exactly the
    // classes of the minimal-edge-list form computed by permutations
    std::map<std::string, std::set<std::vector<Edge>>> by_key;
    std::map<std::vector<Edge>, std::set<std::string>> by_form;
    for (const Graph& g : testutil::all_graphs_on(4)) {
      std::string key = canonical_key(g);
      auto form = testutil::perm_min_edge_list(g);
      by_key[key].insert(form);
      by_form[form].insert(key);
    }
    REQUIRE(by_key.size() == by_form.size());
    REQUIRE(by_key.size() == 11);  // graph classes on 4 vertices
    for (const auto& [key, forms] : by_key) REQUIRE(forms.size() == 1);
    for (const auto& [form, keys] : by_form) REQUIRE(keys.size() == 1);
  }
}

TEST_CASE("families") {
  REQUIRE(family(Family::complete, 4).edge_count() == 6);
  Graph p1 = family(Family::path, 1);
  REQUIRE(p1.vertex_count() == 1);
  REQUIRE(p1.edge_count() == 0);
  REQUIRE(family(Family::cycle, 4).edges() ==
          std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  REQUIRE_THROWS_AS(family(Family::cycle, 2), std::invalid_argument);
  REQUIRE(family(Family::edgeless, 3).edge_count() == 0);

  REQUIRE(chromatic::family_from_name("cycle") == Family::cycle);
  REQUIRE_THROWS_AS(chromatic::family_from_name("torus"),
                    std::invalid_argument);
}

TEST_CASE("random graphs") {
  Graph a = chromatic::random_graph(7, 0.5, 12345);
  Graph b = chromatic::random_graph(7, 0.5, 12345);
  REQUIRE(a == b);
  REQUIRE(chromatic::random_graph(7, 0.5, 54321) != a);

  REQUIRE(chromatic::random_graph(6, 0.0, 1).edge_count() == 0);
  REQUIRE(chromatic::random_graph(6, 1.0, 1).edge_count() == 15);
  REQUIRE_THROWS_AS(chromatic::random_graph(6, 1.5, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(chromatic::random_graph(6, -0.1, 1), std::invalid_argument);
}

TEST_CASE("partitions") {
  REQUIRE(Partition({3, 1}).sum() == 4);
  REQUIRE(Partition({3, 1}).length() == 2);
  REQUIRE(Partition({3, 1}).to_string() == "(3,1)");
  REQUIRE(Partition::of_sizes({1, 3}) == Partition({3, 1}));
  REQUIRE_THROWS_AS(Partition({1, 3}), std::invalid_argument);
  REQUIRE_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  REQUIRE(Partition({1, 1, 1}) < Partition({2, 1}));
  REQUIRE(Partition({2, 1}) < Partition({3}));
}
