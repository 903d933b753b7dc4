#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "chromabound/poly.hpp"

namespace chromabound {

/// Rational bracket [lo, hi] around a real root. When `isolating` is set the
/// bracketed polynomial has exactly one distinct real root in (lo, hi], or
/// lo == hi is that root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool isolating = true;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Sturm chain of the square-free part of p; each member is rescaled by a
/// positive constant so sign patterns are unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);

  const std::vector<Poly>& chain() const { return chain_; }
  const Poly& square_free() const { return chain_.front(); }

  int variations_at(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;
  /// Signs (-1, 0, +1) of every chain member at x.
  std::vector<int> signs_at(const Rational& x) const;
  std::vector<int> signs_at_pos_infinity() const;

  /// Number of distinct real roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots in (a, +inf).
  int count_roots_above(const Rational& a) const;
  int count_real_roots() const;

 private:
  std::vector<Poly> chain_;
};

/// 1 + max |a_i / a_lead|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Poly& p);

/// Isolating interval of width <= `width` around the largest real root,
/// or nullopt when p has no real root. Throws ZeroPolynomial for p == 0.
std::optional<RootInterval> largest_real_root(const Poly& p, const Rational& width);

/// All distinct real roots in [from, +inf), sorted, each isolated with
/// width <= `width` and pairwise disjoint.
std::vector<RootInterval> isolate_roots_from(const Poly& p, const Rational& from,
                                             const Rational& width);

struct PositiveForAllXGeX0 {};
struct IdenticallyZero {};
/// p(x) <= 0 at `x`. When p only touches zero at an irrational point there is
/// no rational witness; `touching` then brackets that zero and x is its midpoint.
struct FailsAt {
  Rational x;
  std::optional<RootInterval> touching;
};
using PositivityVerdict = std::variant<PositiveForAllXGeX0, IdenticallyZero, FailsAt>;

/// Decides p(x) > 0 for every real x >= x0 exactly.
PositivityVerdict positive_beyond(const Poly& p, const Rational& x0);

inline bool is_positive_beyond(const PositivityVerdict& v) {
  return std::holds_alternative<PositiveForAllXGeX0>(v);
}

}  // namespace chromabound
