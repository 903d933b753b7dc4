#include "chromabound/roots.hpp"

#include <algorithm>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

int sign_of(const Rational& r) { return sgn(r); }

int count_variations(const std::vector<int>& signs) {
  int last = 0;
  int v = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

}  // namespace

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");
  Poly p0 = square_free_part(p);
  chain_.push_back(p0);
  if (p0.degree() == 0) return;
  chain_.push_back(primitive_part(p0.derivative()));
  while (chain_.back().degree() > 0) {
    const Poly& a = chain_[chain_.size() - 2];
    const Poly& b = chain_.back();
    Poly r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain_.push_back(primitive_part(-r));
  }
}

std::vector<int> SturmSequence::signs_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(sign_of(q(x)));
  return s;
}

std::vector<int> SturmSequence::signs_at_pos_infinity() const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(sign_of(q.leading()));
  return s;
}

int SturmSequence::variations_at(const Rational& x) const { return count_variations(signs_at(x)); }

int SturmSequence::variations_at_pos_infinity() const {
  return count_variations(signs_at_pos_infinity());
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) {
    int lead = sign_of(q.leading());
    s.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return count_variations(s);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_roots_above(const Rational& a) const {
  return variations_at(a) - variations_at_pos_infinity();
}

int SturmSequence::count_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

Rational cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Cauchy bound of the zero polynomial");
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coeff(static_cast<std::size_t>(i))) / lead;
    if (ratio > m) m = ratio;
  }
  return m + 1;
}

std::optional<RootInterval> largest_real_root(const Poly& p, const Rational& width) {
  if (p.is_zero()) throw ZeroPolynomial("largest real root of the zero polynomial");
  if (width <= 0) throw DomainViolation("isolation width must be positive");
  SturmSequence sturm(p);
  const Poly& f = sturm.square_free();
  if (f.degree() <= 0) return std::nullopt;
  Rational hi = cauchy_bound(f);
  Rational lo = -hi;
  if (sturm.count_roots(lo, hi) == 0) return std::nullopt;
  // Invariant: a root in (lo, hi] and none above hi.
  while (hi - lo > width) {
    Rational mid = midpoint(lo, hi);
    const int above = sturm.count_roots(mid, hi);
    if (above >= 1) {
      lo = mid;
    } else if (f(mid) == 0) {
      return RootInterval{mid, mid, true};
    } else {
      hi = mid;
    }
  }
  if (f(hi) == 0) return RootInterval{hi, hi, true};
  return RootInterval{lo, hi, sturm.count_roots(lo, hi) == 1};
}

std::vector<RootInterval> isolate_roots_from(const Poly& p, const Rational& from,
                                             const Rational& width) {
  if (p.is_zero()) throw ZeroPolynomial("root isolation of the zero polynomial");
  if (width <= 0) throw DomainViolation("isolation width must be positive");
  SturmSequence sturm(p);
  const Poly& f = sturm.square_free();
  std::vector<RootInterval> out;
  if (f.degree() <= 0) return out;
  if (f(from) == 0) out.push_back({from, from, true});
  Rational bound = cauchy_bound(f);
  if (bound <= from) return out;

  struct Pending {
    Rational a, b;
  };
  std::vector<Pending> stack{{from, bound}};
  std::vector<RootInterval> found;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const int c = sturm.count_roots(cur.a, cur.b);
    if (c == 0) continue;
    if (c > 1) {
      Rational mid = midpoint(cur.a, cur.b);
      stack.push_back({mid, cur.b});
      stack.push_back({cur.a, mid});
      continue;
    }
    Rational a = cur.a, b = cur.b;
    bool exact = false;
    while (true) {
      if (f(b) == 0) {
        found.push_back({b, b, true});
        exact = true;
        break;
      }
      if (b - a <= width && f(a) != 0) break;
      Rational mid = midpoint(a, b);
      if (f(mid) == 0) {
        found.push_back({mid, mid, true});
        exact = true;
        break;
      }
      if (sturm.count_roots(a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    if (!exact) found.push_back({a, b, true});
  }
  std::sort(found.begin(), found.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  // Separate touching neighbours by tightening the right one.
  for (std::size_t j = 0; j + 1 < found.size(); ++j) {
    RootInterval& right = found[j + 1];
    while (right.lo <= found[j].hi && right.lo != right.hi) {
      Rational mid = midpoint(right.lo, right.hi);
      if (f(mid) == 0) {
        right = {mid, mid, true};
      } else if (sturm.count_roots(right.lo, mid) == 1) {
        right.hi = mid;
      } else {
        right.lo = mid;
      }
    }
  }
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

PositivityVerdict positive_beyond(const Poly& p, const Rational& x0) {
  if (p.is_zero()) return IdenticallyZero{};
  if (p.degree() == 0) {
    if (p.leading() > 0) return PositiveForAllXGeX0{};
    return FailsAt{x0, std::nullopt};
  }
  SturmSequence sturm(p);
  if (p.leading() > 0 && p(x0) > 0 && sturm.count_roots_above(x0) == 0) {
    return PositiveForAllXGeX0{};
  }

  // Not positive: find a rational point with p <= 0, preferring the interior
  // of a region where p is nonpositive.
  const Rational width = ratio(1, 1024);
  auto roots = isolate_roots_from(p, x0, width);
  std::vector<Rational> candidates;
  Rational prev = x0;
  bool prev_is_x0 = true;
  for (const auto& r : roots) {
    if (!(prev_is_x0 && r.lo == x0 && r.hi == x0)) candidates.push_back(midpoint(prev, r.lo));
    prev = r.hi;
    prev_is_x0 = false;
  }
  candidates.push_back(prev + 1);
  for (const auto& c : candidates) {
    if (c >= x0 && p(c) <= 0) return FailsAt{c, std::nullopt};
  }
  if (p(x0) <= 0) return FailsAt{x0, std::nullopt};
  for (const auto& r : roots) {
    if (r.lo == r.hi && p(r.lo) <= 0) return FailsAt{r.lo, std::nullopt};
  }
  // p >= 0 everywhere on [x0, inf) but vanishes at an even-multiplicity
  // root with no exact rational hit.
  for (const auto& r : roots) {
    if (sgn(p(r.lo)) == sgn(p(r.hi))) return FailsAt{midpoint(r.lo, r.hi), r};
  }
  return FailsAt{roots.empty() ? x0 : midpoint(roots.front().lo, roots.front().hi),
                 roots.empty() ? std::nullopt : std::optional<RootInterval>(roots.front())};
}

}  // namespace chromabound
