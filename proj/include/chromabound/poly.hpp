#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromabound {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. gmpxx leaves Rational(num, den) unreduced.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q" or a plain decimal such as "2.95" into an exact rational.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "-14/1".
std::string to_fraction_string(const Rational& r);

/// Dense univariate polynomial over the rationals. Coefficient i multiplies
/// x^i; trailing zeros are never stored, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<long> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  /// The polynomial x.
  static Poly x();
  /// x - root
  static Poly linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Poly derivative() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Throws InexactDivision when the remainder is nonzero.
Poly exact_div(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), made primitive with a positive leading coefficient.
Poly square_free_part(const Poly& p);

/// Positive rescaling to coprime integer coefficients. Preserves signs.
Poly primitive_part(const Poly& p);

/// q(x) = p(x + c).
Poly shift(const Poly& p, const Rational& c);

/// x (x-1) ... (x-k+1); the constant 1 for k = 0.
Poly falling_factorial(unsigned k);

/// "x^12 - 14x^11 + 90x^10 - ...".
std::string pretty(const Poly& p);

/// Coefficient strings "num/den", lowest degree first.
std::vector<std::string> to_coefficient_strings(const Poly& p);
Poly from_coefficient_strings(std::span<const std::string> coefficients);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace chromabound
