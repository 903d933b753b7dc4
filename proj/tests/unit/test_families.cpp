#include <doctest.h>

#include "../support/properties.hpp"
#include "chromabound/chroma.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/families.hpp"

using namespace chromabound;

namespace {

const Poly& xm1() {
  static const Poly p = Poly::linear_factor(1);
  return p;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("builders") {
    const Graph theta = build_theta({2, 1, 3});
    CHECK(theta.order() == 5);
    CHECK(theta.size() == 6);
    const Graph vt = build_vt(12);
    CHECK(vt.order() == 22);
    CHECK(vt.size() == 33);
    CHECK(canonical_form(build_sk4({1, 1, 1})) == canonical_form(build_complete(4)));
    CHECK(build_wheel(12).order() == 13);
    CHECK(build_wheel(12).size() == 24);
    const Graph sk4 = build_sk4({3, 4, 4});
    CHECK(sk4.order() == 12);
    CHECK(sk4.size() == 14);
    CHECK(build_theta({1, 1, 1}).size() == 1);
    CHECK(canonical_form(build_theta({1, 1, 2})) == canonical_form(build_cycle(3)));
  }

  TEST_CASE("V_t edge set") {
    const int t = 8;
    const Graph g = build_vt(t);
    auto u = [](int i) { return i - 1; };
    auto v = [](int i) { return t + i - 2; };
    for (int i = 1; i < t; ++i) CHECK(g.has_edge(u(i), u(i + 1)));
    for (int i = 2; i < t - 1; ++i) CHECK(g.has_edge(v(i), v(i + 1)));
    for (int i = 2; i <= t - 1; ++i) CHECK(g.has_edge(u(i), v(i)));
    CHECK(g.has_edge(u(1), v(2)));
    CHECK(g.has_edge(u(t), v(t - 1)));
    CHECK(g.has_edge(u(1), u(t)));
    CHECK(g.size() == 3 * t - 3);
  }

  TEST_CASE("specs are validated") {
    CHECK_THROWS_AS(build_theta({0, 1, 1}), InvalidSpec);
    CHECK_THROWS_AS(build_sk4({1, 0, 2}), InvalidSpec);
    CHECK_THROWS_AS(build_k3t({2, {1, 1}, {1}, {1, 1}}), InvalidSpec);
    CHECK_THROWS_AS(build_cactus({{2}, 0, {}}), InvalidSpec);
    CHECK_THROWS_AS(build_cactus({{3, 3}, 0, {5}}), InvalidSpec);
    CHECK_THROWS_AS(build_cstar({4, 3, {}}), InvalidSpec);
    CHECK_THROWS_AS(build_cstar({4, 6, {0, 9}}), InvalidSpec);
  }

  TEST_CASE("theta closed forms") {
    const Poly expected = Poly::x() * xm1() * Poly::linear_factor(2) * Poly{3, -3, 1};
    CHECK(theta_poly({2, 1, 3}) == expected);
    CHECK(theta_poly({2, 1, 3})(Rational(3)) == 18);
    CHECK(theta_poly({1, 1, 1}) == Poly::x() * xm1());
    CHECK(theta_poly_shifted({1, 1, 1}) == Poly::x() * Poly{1, 1});
    CHECK(theta_poly_shifted({2, 1, 3})(Rational(2)) == 18);
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        for (int c = 1; c <= 4; ++c) {
          CHECK(theta_poly({a, b, c}) == chromatic_polynomial(build_theta({a, b, c})));
          CHECK(theta_poly({a, b, c}) == theta_poly({c, a, b}));
          CHECK(theta_poly({a, b, c}) == theta_poly({b, a, c}));
        }
      }
    }
    const auto shift_suite = oracle::theta_shift_suite(4);
    CHECK(shift_suite.checked == 64);
    CHECK(shift_suite.ok());
  }

  TEST_CASE("SK4 closed forms") {
    CHECK(sk4_poly({1, 1, 1}) == falling_factorial(4));
    const Poly p = sk4_poly({3, 4, 4});
    CHECK(p.degree() == 12);
    const long top[] = {1, -14, 90, -352, 935};
    for (int i = 0; i < 5; ++i) CHECK(p.coeff(static_cast<std::size_t>(12 - i)) == top[i]);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int c = 1; c <= 3; ++c) CHECK(sk4_poly({a, b, c}) == chromatic_polynomial(build_sk4({a, b, c})));
      }
    }
  }

  TEST_CASE("K3t closed forms") {
    CHECK(k3t_poly({1, {1}, {1}, {1}}) == Poly::x() * pow(xm1(), 3));
    const K3tSpec k32{2, {1, 1}, {1, 1}, {1, 1}};
    CHECK(k3t_poly(k32) == chromatic_polynomial(build_k3t(k32)));
    const K3tSpec k33{3, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    CHECK(k3t_poly(k33)(Rational(2)) == 2);
    const K3tSpec mixed{3, {1, 2, 3}, {2, 1, 1}, {3, 3, 1}};
    CHECK(build_k3t(mixed).order() == k3t_order(mixed));
    CHECK(k3t_poly(mixed) == chromatic_polynomial(build_k3t(mixed)));
  }

  TEST_CASE("cactus closed forms") {
    const Poly pendant = Poly::x() * pow(xm1(), 2) * Poly::linear_factor(2);
    CHECK(cactus_poly({{3}, 1, {}}) == pendant);
    CHECK(cactus_poly({{5}, 0, {}}) == pow(xm1(), 5) - xm1());
    const CactusSpec spec{{3, 4, 5}, 2, {}};
    const Graph g = build_cactus(spec);
    CHECK(is_cactus(g));
    CHECK(g.order() == cactus_order(spec));
    CHECK(cactus_order(spec) == 2 - 3 + 1 + 12);
    CHECK(cactus_poly(spec) == chromatic_polynomial(g));
    // Attachment does not change the polynomial.
    const CactusSpec other{{3, 4, 5}, 2, {0, 1, 4, 2}};
    CHECK(chromatic_polynomial(build_cactus(other)) == cactus_poly(spec));
  }

  TEST_CASE("C* members and wheels") {
    const CStarSpec path{4, 7, {}};
    const CStarSpec star{4, 7, {0, 0, 0}};
    for (const auto& s : {path, star}) {
      const Graph g = build_cstar(s);
      CHECK(g.size() == 6 + 3);
      CHECK(clique_number(g) == 4);
      CHECK(chromatic_polynomial(g) == cstar_poly(s));
    }
    for (int t = 3; t <= 10; ++t) CHECK(wheel_poly(t) == chromatic_polynomial(build_wheel(t)));
  }

  TEST_CASE("cactus witnesses") {
    std::string note;
    CHECK_MESSAGE(oracle::witness_ok(CactusHost::Wheel, 12, {3, 3, 3, 3, 3, 3}, &note), note);
    CHECK(cactus_witness(CactusHost::Wheel, 12).cactus.order() == 13);
    CHECK_MESSAGE(oracle::witness_ok(CactusHost::Ladder, 12, {3, 3, 4, 4, 4, 4}, &note), note);
    CHECK_MESSAGE(oracle::witness_ok(CactusHost::Ladder, 8, {3, 3, 4, 4}, &note), note);
    CHECK_THROWS_AS(cactus_witness(CactusHost::Wheel, 7), UnsupportedHost);
    CHECK_THROWS_AS(cactus_witness(CactusHost::Ladder, 2), UnsupportedHost);
  }
}
