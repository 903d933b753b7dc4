#include <doctest.h>

#include "chromabound/bounds.hpp"
#include "chromabound/errors.hpp"

using namespace chromabound;

TEST_SUITE("bounds") {
  TEST_CASE("G_abc values") {
    CHECK(g_abc(2, 2, 2, Rational(2)) == ratio(23, 16));
    CHECK(g_abc(1, 1, 1, Rational(2)) == ratio(9, 4));
    CHECK(g_abc(1, 2, 2, Rational(3)) == ratio(784, 729));
    CHECK(g_abc(1, 1, 3, Rational(1)) == 4);
    CHECK_THROWS_AS(g_abc(1, 1, 1, Rational(0)), ZeroArgument);
    CHECK_THROWS_AS(g_abc(0, 1, 1, Rational(1)), InvalidSpec);
  }

  TEST_CASE("theta bound") {
    const BoundReport r = check_theta_bound(1, 1, 1, Rational(1));
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 2);
    CHECK(r.holds);
    CHECK(r.lemma == "theta");
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        for (int c = 1; c <= 4; ++c) {
          for (const Rational x : {Rational(1), ratio(3, 2), Rational(2), Rational(7)}) {
            CHECK(check_theta_bound(a, b, c, x).holds);
          }
        }
      }
    }
    CHECK_THROWS_AS(check_theta_bound(1, 1, 1, ratio(1, 2)), DomainViolation);
  }

  TEST_CASE("uniform theta bound") {
    CHECK(check_theta_uniform_bound(4, 4, 4, Rational(2)).holds);
    CHECK(check_theta_uniform_bound(2, 3, 4, ratio(14143, 10000)).holds);
    CHECK_THROWS_AS(check_theta_uniform_bound(2, 1, 1, ratio(3, 2) - ratio(1, 10)), DomainViolation);
    CHECK(check_theta_uniform_bound(2, 1, 1, ratio(3, 2)).holds);
    CHECK_THROWS_AS(check_theta_uniform_bound(1, 1, 1, Rational(3)), DomainViolation);
    CHECK_THROWS_AS(check_theta_uniform_bound(2, 2, 2, ratio(14142, 10000)), DomainViolation);
  }

  TEST_CASE("SK4 bound") {
    const BoundReport r = check_sk4_bound({1, 1, 1}, Rational(2));
    CHECK(r.lhs == 0);
    CHECK(r.holds);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int c = 1; c <= 3; ++c) {
          for (int x = 2; x <= 6; ++x) CHECK(check_sk4_bound({a, b, c}, Rational(x)).holds);
        }
      }
    }
    CHECK_THROWS_AS(check_sk4_bound({1, 1, 1}, ratio(3, 2)), DomainViolation);
  }

  TEST_CASE("K3t bound") {
    CHECK(f_xt(Rational(1), 1) == 16);
    CHECK_THROWS_AS(f_xt(Rational(1), 0), DomainViolation);
    CHECK_THROWS_AS(f_xt(Rational(0), 1), ZeroArgument);
    const K3tSpec star{1, {1}, {1}, {1}};
    CHECK(check_k3t_bound(star, Rational(2)).holds);
    const K3tSpec k33{3, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    const BoundReport r = check_k3t_bound(k33, Rational(2));
    CHECK(r.lhs == k3t_poly(k33)(Rational(3)));
    CHECK(r.holds);
    CHECK(check_k3t_bound({2, {1, 2}, {2, 2}, {1, 3}}, ratio(5, 2)).holds);
    CHECK_THROWS_AS(check_k3t_bound(star, Rational(1)), DomainViolation);
  }

  TEST_CASE("product bound") {
    const BoundReport r = check_product_bound({3}, Rational(1));
    CHECK(r.lhs == 2);
    CHECK(r.rhs == ratio(64, 27));
    CHECK(r.holds);
    CHECK(check_product_bound({3, 4, 7}, Rational(2)).holds);
    for (int p = 1; p <= 30; ++p) CHECK(binomial_domination(p));
    CHECK_THROWS_AS(check_product_bound({2, 3}, Rational(2)), DomainViolation);
    CHECK_THROWS_AS(check_product_bound({}, Rational(2)), DomainViolation);
  }

  TEST_CASE("cactus bound") {
    CHECK(check_cactus_bound({{3}, 0, {}}, Rational(1)).holds);
    CHECK(check_cactus_bound({{3, 4, 5}, 2, {}}, Rational(3)).holds);
    CHECK(check_cactus_bound({{4, 4}, 1, {}}, ratio(3, 2)).holds);
    CHECK_THROWS_AS(check_cactus_bound({{3}, 0, {}}, ratio(1, 2)), DomainViolation);
  }

  TEST_CASE("root certificates") {
    const RootCertificate k33 = k33son_certificate();
    CHECK(k33.certified());
    REQUIRE(k33.largest_root);
    CHECK(k33.largest_root->width() <= ratio(1, 1000000));
    CHECK(k33.largest_root->lo > ratio(294, 100));
    CHECK(k33.largest_root->hi < ratio(295, 100));
    CHECK(k33.roots_above_threshold == 0);
    CHECK(k33.polynomial(k33.threshold) > 0);

    const RootCertificate cactus = cactusson_certificate();
    CHECK(cactus.certified());
    REQUIRE(cactus.largest_root);
    CHECK(cactus.largest_root->width() <= ratio(1, 1000000));
    CHECK(cactus.largest_root->lo > ratio(2997, 1000));
    CHECK(cactus.largest_root->hi < ratio(2998, 1000));

    CHECK_FALSE(k33son_certificate(10, ratio(29, 10)).certified());
    CHECK_THROWS_AS(k33son_polynomial(0), DomainViolation);
    CHECK_THROWS_AS(cactusson_polynomial(0), DomainViolation);
  }

  TEST_CASE("certified polynomials stay positive on a dense sample") {
    const Poly k33 = k33son_polynomial(10);
    const Poly cactus = cactusson_polynomial(6);
    for (int i = 0; i <= 500; ++i) {
      const Rational x = ratio(295, 100) + ratio(i, 10);
      CHECK(k33(x) > 0);
      CHECK(cactus(x + ratio(48, 1000)) > 0);
    }
  }
}
