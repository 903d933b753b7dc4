#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "../support/properties.hpp"
#include "chromabound/chroma.hpp"
#include "chromabound/conjecture.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/families.hpp"

using namespace chromabound;

TEST_SUITE("chroma") {
  TEST_CASE("examples") {
    const Poly xm1 = Poly::linear_factor(1);
    CHECK(chromatic_polynomial(build_cycle(5)) == pow(xm1, 5) - xm1);
    CHECK(chromatic_polynomial(build_complete(4)) == falling_factorial(4));
    const Graph pendant = build_cycle(3).with_vertex(singleton(0));
    const Poly expected = Poly::x() * pow(xm1, 2) * Poly::linear_factor(2);
    CHECK(chromatic_polynomial(pendant) == expected);
    CHECK(count_colorings(pendant, 3) == 12);
    CHECK(chromatic_polynomial(Graph(0)) == Poly{1});
    CHECK(chromatic_polynomial(Graph(3)) == pow(Poly::x(), 3));
  }

  TEST_CASE("colouring counts") {
    CHECK(count_colorings(build_complete(4), 4) == 24);
    CHECK(count_colorings(build_cycle(5), 3) == 30);
    CHECK(count_colorings(build_cycle(5), 0) == 0);
    CHECK(count_colorings(Graph(0), 0) == 1);
  }

  TEST_CASE("structural facts") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_graph(rng, 9, 0.4);
      const Poly p = chromatic_polynomial(g);
      CHECK(p.degree() == g.order());
      CHECK(p.leading() == 1);
      CHECK(p.coeff(static_cast<std::size_t>(g.order() - 1)) == -g.size());
      CHECK(p.coeff(0) == 0);
      for (int i = 0; i <= p.degree(); ++i) {
        const auto& c = p.coeff(static_cast<std::size_t>(i));
        CHECK(((g.order() - i) % 2 == 0 ? c >= 0 : c <= 0));
      }
    }
  }

  TEST_CASE("engine matches brute force on every connected graph up to order 5") {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : enumerate_connected(n)) {
        const Poly p = chromatic_polynomial(g);
        for (unsigned x = 0; x <= 5; ++x) CHECK(p(Rational(x)) == Rational(count_colorings(g, x)));
      }
    }
  }

  TEST_CASE("clique sums") {
    const Poly c3 = chromatic_polynomial(build_cycle(3));
    const Poly c4 = chromatic_polynomial(build_cycle(4));
    const Poly k4 = falling_factorial(4);
    const std::vector<Poly> parts{c3, c4, k4};
    const Poly sum = clique_sum_polynomial(parts, 2, 3);
    CHECK(sum(Rational(4)) == 336);
    const Graph glued(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 0}, {0, 5}, {0, 6}, {1, 5}, {1, 6}, {5, 6}});
    CHECK(chromatic_polynomial(glued) == sum);

    const std::vector<Poly> triangles{c3, c3};
    const Poly bowtie = Poly::x() * pow(Poly::linear_factor(1), 2) * pow(Poly::linear_factor(2), 2);
    CHECK(clique_sum_polynomial(triangles, 1, 2) == bowtie);

    const std::vector<Poly> k4k3{k4, c3};
    CHECK(clique_sum_polynomial(k4k3, 2, 2) == k4 * Poly::linear_factor(2));

    const std::vector<Poly> bad{Poly::x(), Poly::x()};
    CHECK_THROWS_AS(clique_sum_polynomial(bad, 2, 2), InexactDivision);
    CHECK_THROWS_AS(clique_sum_polynomial(triangles, 1, 3), InvalidSpec);
  }

  TEST_CASE("cycle polynomial") {
    for (unsigned n = 3; n <= 12; ++n) CHECK(cycle_polynomial(n) == chromatic_polynomial(build_cycle(static_cast<int>(n))));
  }

  TEST_CASE("engine limits") {
    ChromaticEngine engine;
    CHECK(engine.polynomial(build_complete(5)) == falling_factorial(5));
    CHECK(ChromaticEngine::within_limits(build_cycle(60)));
    CHECK(engine.polynomial(build_cycle(60)) == cycle_polynomial(60));
    CHECK(engine.cache_size() == 0);
    CHECK(engine.polynomial(build_wheel(6)) == wheel_poly(6));
    CHECK(engine.cache_size() > 0);
    engine.clear_cache();
    CHECK(engine.cache_size() == 0);
  }

  TEST_CASE("addition-contraction identity") {
    const auto r = oracle::addition_contraction_suite(60, 101);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }

  TEST_CASE("chromatic number relations") {
    const auto r = oracle::chromatic_relation_suite(60, 202);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }

  TEST_CASE("connected subgraph bound") {
    const auto r = oracle::subgraph_suite(60, 303);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }
}
