#include "chromabound/poly.hpp"

#include <algorithm>
#include <sstream>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

const Rational& zero_rational() {
  static const Rational kZero(0);
  return kZero;
}

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (!frac.empty() && !valid_integer_text(frac)) {
      throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
    }
    Integer int_part = parse_integer(digits);
    Integer frac_part = frac.empty() ? Integer(0) : Integer(std::string(frac), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(abs(int_part) * scale + frac_part, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

Poly::Poly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::linear_factor(const Rational& root) { return Poly(std::vector<Rational>{-root, 1}); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational& Poly::leading() const {
  return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      term = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += term;
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (dividend.degree() < divisor.degree()) return {Poly{}, dividend};
  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const auto dv = divisor.coefficients();
  const std::size_t dd = dv.size() - 1;
  const Rational inv_lead = 1 / dv[dd];
  std::vector<Rational> quot(rem.size() - dd);
  Rational term;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dd] * inv_lead;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      term = q * dv[j];
      rem[k + j] -= term;
    }
    quot[k] = std::move(q);
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& dividend, const Poly& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) {
    throw InexactDivision("remainder " + pretty(r) + " dividing " + pretty(dividend) + " by " +
                          pretty(divisor));
  }
  return q;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return p * ratio(den_lcm, num_gcd);
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = primitive_part(a);
  Poly v = primitive_part(b);
  while (!v.is_zero()) {
    Poly r = primitive_part(divmod(u, v).second);
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u * Rational(1 / u.leading());
}

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  Poly g = gcd(p, p.derivative());
  Poly s = primitive_part(exact_div(p, g));
  if (s.leading() < 0) s = -s;
  return s;
}

Poly shift(const Poly& p, const Rational& c) {
  // Horner in the ring: q <- q * (x + c) + a_i.
  const auto a = p.coefficients();
  std::vector<Rational> q;
  q.reserve(a.size());
  for (std::size_t k = a.size(); k-- > 0;) {
    q.emplace_back(0);
    for (std::size_t j = q.size() - 1; j > 0; --j) {
      q[j] = q[j - 1] + c * q[j];
    }
    q[0] = c * q[0] + a[k];
  }
  return Poly(std::move(q));
}

Poly falling_factorial(unsigned k) {
  Poly result = Poly::constant(1);
  for (unsigned i = 0; i < k; ++i) result *= Poly::linear_factor(Rational(i));
  return result;
}

std::string pretty(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if (mag.get_den() == 1) {
        os << mag.get_num();
      } else {
        os << "(" << mag.get_num() << "/" << mag.get_den() << ")";
      }
    }
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> to_coefficient_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(to_fraction_string(c));
  return out;
}

Poly from_coefficient_strings(std::span<const std::string> coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (const auto& s : coefficients) v.push_back(parse_rational(s));
  return Poly(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << pretty(p); }

}  // namespace chromabound
