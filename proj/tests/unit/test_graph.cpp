#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../support/oracles.hpp"
#include "chromabound/conjecture.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/families.hpp"
#include "chromabound/graph.hpp"

using namespace chromabound;

namespace {

Graph k33() { return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }

// Three graphs glued along the edge 0-1: C3, C4 and K4.
Graph clique_sum_example() {
  return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 0}, {0, 5}, {0, 6}, {1, 5}, {1, 6}, {5, 6}});
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("construction collapses parallel edges and rejects loops") {
    const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.size() == 2);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidEdge);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidEdge);
  }

  TEST_CASE("edits") {
    const Graph tri = build_cycle(3);
    const Graph k2 = tri.contract(Edge(0, 1));
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    const Graph p4 = build_cycle(4).without_edge(Edge(0, 3));
    CHECK(canonical_form(p4) == canonical_form(build_path(3)));
    CHECK(canonical_form(build_cycle(5).contract(Edge(0, 1))) == canonical_form(build_cycle(4)));
    CHECK_THROWS_AS(tri.with_edge(Edge(0, 1)), InvalidEdge);
    CHECK_THROWS_AS(build_path(3).without_edge(Edge(0, 2)), InvalidEdge);
    CHECK_THROWS_AS(build_path(3).contract(Edge(0, 3)), InvalidEdge);
  }

  TEST_CASE("blocks") {
    const Graph pendant = build_cycle(3).with_vertex(singleton(0));
    const auto d = blocks(pendant);
    CHECK(d.blocks.size() == 2);
    CHECK(popcount(d.cut_vertices) == 1);
    CHECK(blocks(clique_sum_example()).blocks.size() == 1);
    const Graph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK(blocks(tree).blocks.size() == 4);
    CHECK_THROWS_AS(blocks(Graph(2)), Disconnected);
  }

  TEST_CASE("blocks partition the edges") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_connected(rng, 9, 0.2);
      std::size_t edges = 0;
      for (VertexSet b : blocks(g).blocks) {
        const Graph h = g.induced(b);
        edges += static_cast<std::size_t>(h.size());
        CHECK((h.size() == 1 || is_k_connected(h, 2)));
      }
      CHECK(edges == static_cast<std::size_t>(g.size()));
    }
  }

  TEST_CASE("connectivity") {
    CHECK(connectivity_class(build_cycle(5), 2));
    CHECK_FALSE(connectivity_class(build_cycle(5), 3));
    CHECK(connectivity_class(build_complete(4), 3));
    CHECK(connectivity_class(k33(), 3));
    CHECK_FALSE(connectivity_class(Graph(2), 1));
  }

  TEST_CASE("chromatic and clique numbers") {
    CHECK(chromatic_number(build_complete(4)) == 4);
    CHECK(chromatic_number(build_cycle(5)) == 3);
    CHECK(chromatic_number(build_theta({2, 1, 3})) == 3);
    CHECK(clique_number(build_complete(4)) == 4);
    CHECK(clique_number(build_cycle(5)) == 2);
    CHECK(clique_number(clique_sum_example()) == 4);
  }

  TEST_CASE("chromatic number is the first positive colouring count") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_graph(rng, 7, 0.5);
      int x = 1;
      while (count_colorings(g, static_cast<unsigned>(x)) == 0) ++x;
      CHECK(chromatic_number(g) == x);
    }
  }

  TEST_CASE("planarity examples") {
    CHECK(is_planar(build_complete(4)));
    CHECK_FALSE(is_planar(build_complete(5)));
    CHECK_FALSE(is_planar(k33()));
    CHECK(is_planar(build_wheel(12)));
    CHECK(is_planar(build_vt(12)));
  }

  TEST_CASE("planarity agrees with the Kuratowski minor oracle") {
    oracle::MinorPlanarity minors;
    for (int n = 5; n <= 7; ++n) {
      for (const Graph& g : enumerate_connected(n)) CHECK(is_planar(g) == minors.planar(g));
    }
  }

  TEST_CASE("canonical form") {
    const Graph c5 = build_cycle(5);
    std::mt19937_64 rng(9);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 20; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(c5.relabeled(perm)) == canonical_form(c5));
    }
    CHECK(canonical_form(c5) != canonical_form(build_path(4)));
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(star) != canonical_form(build_path(3)));
  }

  TEST_CASE("canonical form is invariant under random relabelling") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = oracle::random_graph(rng, 10, 0.4);
      const std::string form = canonical_form(g);
      std::vector<int> perm(10);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = 0; i < 100; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g.relabeled(perm)) == form);
      }
    }
  }

  TEST_CASE("graph6") {
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(build_complete(4)) == "C~");
    CHECK(from_graph6("C~") == build_complete(4));
    CHECK(from_graph6(">>graph6<<C~\n") == build_complete(4));
    std::mt19937_64 rng(2);
    for (int n : {0, 1, 5, 13, 40, 63, 64}) {
      const Graph g = oracle::random_graph(rng, n, 0.3);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(from_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(from_graph6("C"), MalformedGraph6);
    CHECK_THROWS_AS(from_graph6("C~~"), MalformedGraph6);
    CHECK_THROWS_AS(from_graph6("C\x7f"), MalformedGraph6);
  }

  TEST_CASE("cactus recognition and embeddings") {
    CHECK(is_cactus(build_cactus({{3, 4}, 2, {}})));
    CHECK_FALSE(is_cactus(build_complete(4)));
    CHECK_FALSE(is_cactus(build_theta({2, 2, 2})));
    const std::vector<int> map{0, 1, 2};
    CHECK(is_subgraph_embedding(build_path(2), build_cycle(3), map));
    const std::vector<int> clash{0, 0, 1};
    CHECK_FALSE(is_subgraph_embedding(build_path(2), build_cycle(3), clash));
  }
}
