#pragma once

#include <string>
#include <vector>

#include "chromabound/families.hpp"
#include "chromabound/poly.hpp"
#include "chromabound/roots.hpp"

namespace chromabound {

/// One instance of a bound inequality lhs <= rhs evaluated exactly at x.
struct BoundReport {
  std::string lemma;
  /// Parameter name and integer values, in display order.
  std::vector<std::pair<std::string, std::vector<int>>> params;
  Rational x;
  Rational lhs;
  Rational rhs;
  bool strict = false;
  bool holds = false;
};

/// The four-case correction factor indexed by how many of a, b, c equal 1.
Rational g_abc(int a, int b, int c, const Rational& x);

/// pi(theta_{a,b,c}, x+1) <= x^{a+b+c} G_{a,b,c}(x) / (x+1), x >= 1.
BoundReport check_theta_bound(int a, int b, int c, const Rational& x);
/// pi(theta_{a,b,c}, x+1) <= x^{a+b+c} (1 + 1/x + 1/x^3 + 1/x^4) / (x+1) for
/// max(a,b,c) >= 2 and x >= sqrt(2) (tested exactly as x > 0, x^2 >= 2).
BoundReport check_theta_uniform_bound(int a, int b, int c, const Rational& x);
/// pi(SK4, x+1) <= ((x-1)/(x+1)) x^{s1+s2+s3+1} (1 + 2/x^2), x >= 2.
BoundReport check_sk4_bound(const SK4Spec& spec, const Rational& x);

/// 3(1+1/x+1/x^3+1/x^4)^t + (1/x)(1+2/x+1/x^2)^t + (x-1)(1+2/x^2)^t.
Rational f_xt(const Rational& x, int t);
/// pi(G, x+1) <= x^{n+2t-2} F(x,t) / (x+1)^{2t-1}, x >= 2.
BoundReport check_k3t_bound(const K3tSpec& spec, const Rational& x);

/// prod(x^{N_i} + 1) <= x^{N-3p} (x + 1/(3x^2))^{3p}, every N_i >= 3, x >= 1.
/// `holds` also requires C(p,i) <= C(3p,i)/3^i for i = 0..p.
BoundReport check_product_bound(const std::vector<int>& sizes, const Rational& x);
/// C(p,i) * 3^i <= C(3p,i) for all i = 0..p.
bool binomial_domination(int p);

/// pi(G, x+1) <= x^{n-8p-1} (3x^3+1)^{3p} / (3^{3p} (x+1)^{p-1}), x >= 1.
BoundReport check_cactus_bound(const CactusSpec& spec, const Rational& x);

/// Exact root certificate closing one of the two large-subgraph lemmas.
struct RootCertificate {
  std::string name;
  int parameter = 0;
  Poly polynomial;
  bool leading_positive = false;
  std::optional<RootInterval> largest_root;
  Rational threshold;
  PositivityVerdict beyond;
  /// Sturm chain signs at the threshold and at +infinity.
  std::vector<int> signs_at_threshold;
  std::vector<int> signs_at_infinity;
  /// Distinct real roots in (threshold, Cauchy bound]; must be 0.
  int roots_above_threshold = 0;
  Rational cauchy;

  bool certified() const {
    return leading_positive && largest_root && is_positive_beyond(beyond) && roots_above_threshold == 0;
  }
};

/// r(x) - q(x) with q = 3x(x^4+x^3+x+1)^t + (x^4+2x^3+x^2)^t + x(x-1)(x^4+2x^2)^t
/// and r = x^{2t-1} (x+1)^{2t-1} (x+1)_4.
Poly k33son_polynomial(int t);
/// 3^{3p} x^{8p-3} (x+1)_4 (x+1)^{p-1} - (3x^3+1)^{3p}.
Poly cactusson_polynomial(int p);

RootCertificate k33son_certificate(int t = 10, const Rational& threshold = ratio(295, 100),
                                   const Rational& width = ratio(1, 1000000));
RootCertificate cactusson_certificate(int p = 6, const Rational& threshold = ratio(2998, 1000),
                                      const Rational& width = ratio(1, 1000000));

}  // namespace chromabound
