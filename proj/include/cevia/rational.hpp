#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cevia {

/// Exact arbitrary-precision rational number.
///
/// Always held in lowest terms with a positive denominator; every arithmetic
/// operation re-canonicalizes through GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v);

  /// Accepts "n", "n/d" and plain decimals such as "-1.25".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(unsigned e) const;
  double to_double() const { return v_.get_d(); }

  /// Canonical fraction string: "-11", "-2/5".
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

/// The rational with the smallest denominator (then smallest magnitude) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace cevia
