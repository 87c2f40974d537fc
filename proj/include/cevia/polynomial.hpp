#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cevia/rational.hpp"

namespace cevia {

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// The linear polynomial x - root.
  static Polynomial root_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;
  /// Sign of p(x), computed over the integers without reducing fractions.
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial pow(unsigned e) const;
  Polynomial scaled(const Rational& s) const;
  /// Same roots, leading coefficient one.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'): same real roots, all simple.
Polynomial squarefree_part(const Polynomial& p);
/// Positive multiple with coprime integer coefficients; zero stays zero.
Polynomial primitive_part(const Polynomial& p);

}  // namespace cevia
