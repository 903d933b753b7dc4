#include "chromabound/bounds.hpp"

#include <algorithm>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

Rational rpow(const Rational& x, long e) {
  if (e < 0) return 1 / rpow(x, -e);
  Rational out(1);
  Rational base = x;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) out *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return out;
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void require_domain(bool ok, const std::string& message) {
  if (!ok) throw DomainViolation(message);
}

BoundReport make_report(std::string lemma, std::vector<std::pair<std::string, std::vector<int>>> params,
                        const Rational& x, Rational lhs, Rational rhs) {
  BoundReport r;
  r.lemma = std::move(lemma);
  r.params = std::move(params);
  r.x = x;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.holds = r.lhs <= r.rhs;
  return r;
}

int sum_of(const std::vector<int>& v) {
  int s = 0;
  for (int e : v) s += e;
  return s;
}

}  // namespace

Rational g_abc(int a, int b, int c, const Rational& x) {
  if (x == 0) throw ZeroArgument("G_{a,b,c} is undefined at x = 0");
  if (a < 1 || b < 1 || c < 1) throw InvalidSpec("G_{a,b,c} needs positive integers");
  const int ones = (a == 1) + (b == 1) + (c == 1);
  switch (ones) {
    case 0:
      return 1 + 3 / rpow(x, 3) + 1 / rpow(x, 4);
    case 1:
      return 1 + 2 / rpow(x, 3) + 1 / rpow(x, 6);
    case 2:
      return 1 + 1 / x + 1 / rpow(x, 3) + 1 / rpow(x, 4);
    default:
      return 1 + 2 / x + 1 / rpow(x, 2);
  }
}

BoundReport check_theta_bound(int a, int b, int c, const Rational& x) {
  require_domain(x >= 1, "theta bound needs x >= 1");
  const Rational lhs = theta_poly_shifted({a, b, c})(x);
  const Rational rhs = rpow(x, a + b + c) * g_abc(a, b, c, x) / (x + 1);
  return make_report("theta", {{"abc", {a, b, c}}}, x, lhs, rhs);
}

BoundReport check_theta_uniform_bound(int a, int b, int c, const Rational& x) {
  require_domain(std::max({a, b, c}) >= 2, "uniform theta bound needs max(a,b,c) >= 2");
  require_domain(x > 0 && x * x >= 2, "uniform theta bound needs x >= sqrt(2)");
  const Rational lhs = theta_poly_shifted({a, b, c})(x);
  const Rational factor = 1 + 1 / x + 1 / rpow(x, 3) + 1 / rpow(x, 4);
  const Rational rhs = rpow(x, a + b + c) * factor / (x + 1);
  return make_report("theta-uniform", {{"abc", {a, b, c}}}, x, lhs, rhs);
}

BoundReport check_sk4_bound(const SK4Spec& spec, const Rational& x) {
  require_domain(x >= 2, "SK4 bound needs x >= 2");
  const Rational lhs = sk4_poly(spec)(x + 1);
  const Rational rhs = (x - 1) / (x + 1) * rpow(x, spec.s1 + spec.s2 + spec.s3 + 1) * (1 + 2 / rpow(x, 2));
  return make_report("sk4", {{"s", {spec.s1, spec.s2, spec.s3}}}, x, lhs, rhs);
}

Rational f_xt(const Rational& x, int t) {
  if (x == 0) throw ZeroArgument("F(x,t) is undefined at x = 0");
  require_domain(x > 0, "F(x,t) needs x > 0");
  require_domain(t >= 1, "F(x,t) needs t >= 1");
  return 3 * rpow(1 + 1 / x + 1 / rpow(x, 3) + 1 / rpow(x, 4), t) +
         (1 / x) * rpow(1 + 2 / x + 1 / rpow(x, 2), t) + (x - 1) * rpow(1 + 2 / rpow(x, 2), t);
}

BoundReport check_k3t_bound(const K3tSpec& spec, const Rational& x) {
  require_domain(x >= 2, "K3t bound needs x >= 2");
  const int n = k3t_order(spec);
  const int t = spec.t;
  const Rational lhs = k3t_poly(spec)(x + 1);
  const Rational rhs = rpow(x, n + 2 * t - 2) * f_xt(x, t) / rpow(x + 1, 2 * t - 1);
  return make_report("k3t", {{"t", {t}}, {"a", spec.a}, {"b", spec.b}, {"c", spec.c}}, x, lhs, rhs);
}

bool binomial_domination(int p) {
  for (int i = 0; i <= p; ++i) {
    Integer lhs = binomial(p, i);
    Integer three_i;
    mpz_ui_pow_ui(three_i.get_mpz_t(), 3, static_cast<unsigned long>(i));
    if (lhs * three_i > binomial(3 * p, i)) return false;
  }
  return true;
}

BoundReport check_product_bound(const std::vector<int>& sizes, const Rational& x) {
  require_domain(x >= 1, "product bound needs x >= 1");
  require_domain(!sizes.empty(), "product bound needs p >= 1");
  for (int s : sizes) require_domain(s >= 3, "product bound needs every N_i >= 3");
  const int p = static_cast<int>(sizes.size());
  const int total = sum_of(sizes);
  Rational lhs(1);
  for (int s : sizes) lhs *= rpow(x, s) + 1;
  const Rational rhs = rpow(x, total - 3 * p) * rpow(x + 1 / (3 * x * x), 3 * p);
  BoundReport r = make_report("product", {{"N", sizes}}, x, lhs, rhs);
  r.holds = r.holds && binomial_domination(p);
  return r;
}

BoundReport check_cactus_bound(const CactusSpec& spec, const Rational& x) {
  require_domain(x >= 1, "cactus bound needs x >= 1");
  const int n = cactus_order(spec);
  const int p = static_cast<int>(spec.cycles.size());
  const Rational lhs = cactus_poly(spec)(x + 1);
  const Rational rhs =
      rpow(x, n - 8 * p - 1) * rpow(3 * rpow(x, 3) + 1, 3 * p) / (rpow(Rational(3), 3 * p) * rpow(x + 1, p - 1));
  return make_report("cactus", {{"cycles", spec.cycles}, {"bridges", {spec.bridges}}}, x, lhs, rhs);
}

Poly k33son_polynomial(int t) {
  if (t < 1) throw DomainViolation("K33 certificate needs t >= 1");
  const auto ut = static_cast<unsigned>(t);
  const Poly x = Poly::x();
  const Poly q = Rational(3) * x * pow(Poly{1, 1, 0, 1, 1}, ut) + pow(Poly{0, 0, 1, 2, 1}, ut) +
                 x * Poly::linear_factor(1) * pow(Poly{0, 0, 2, 0, 1}, ut);
  const Poly r = pow(x, 2 * ut - 1) * pow(Poly::linear_factor(-1), 2 * ut - 1) * shift(falling_factorial(4), 1);
  return r - q;
}

Poly cactusson_polynomial(int p) {
  if (p < 1) throw DomainViolation("cactus certificate needs p >= 1");
  const auto up = static_cast<unsigned>(p);
  Integer three_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, 3UL * up);
  const Poly lhs = Rational(three_pow) * pow(Poly::x(), 8 * up - 3) * shift(falling_factorial(4), 1) *
                   pow(Poly::linear_factor(-1), up - 1);
  return lhs - pow(Poly{1, 0, 0, 3}, 3 * up);
}

namespace {

RootCertificate certify(std::string name, int parameter, Poly poly, const Rational& threshold,
                        const Rational& width) {
  RootCertificate c;
  c.name = std::move(name);
  c.parameter = parameter;
  c.polynomial = std::move(poly);
  c.threshold = threshold;
  c.leading_positive = c.polynomial.leading() > 0;
  c.largest_root = largest_real_root(c.polynomial, width);
  c.beyond = positive_beyond(c.polynomial, threshold);
  const SturmSequence sturm(c.polynomial);
  c.signs_at_threshold = sturm.signs_at(threshold);
  c.signs_at_infinity = sturm.signs_at_pos_infinity();
  c.cauchy = cauchy_bound(c.polynomial);
  c.roots_above_threshold = sturm.count_roots(threshold, c.cauchy);
  return c;
}

}  // namespace

RootCertificate k33son_certificate(int t, const Rational& threshold, const Rational& width) {
  return certify("k33son", t, k33son_polynomial(t), threshold, width);
}

RootCertificate cactusson_certificate(int p, const Rational& threshold, const Rational& width) {
  return certify("cactusson", p, cactusson_polynomial(p), threshold, width);
}

}  // namespace chromabound
