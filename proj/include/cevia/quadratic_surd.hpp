#pragma once

#include <string>

#include "cevia/rational.hpp"

namespace cevia {

/// An element a + b*sqrt(d) of the quadratic field Q(sqrt(d)), d not a rational square.
///
/// Values built from plain rationals carry no radicand and mix freely with any
/// field; combining two irrational values with different radicands throws.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument when b != 0 and d is a rational square.
  QuadraticSurd(const Rational& a, const Rational& b, const Rational& d);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Rational& radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  QuadraticSurd conjugate() const;
  /// (a + b sqrt d)(a - b sqrt d).
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  double to_double() const;
  std::string str() const;

  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  QuadraticSurd& operator/=(const QuadraticSurd& o);
  friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
  friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
  friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }
  friend QuadraticSurd operator-(const QuadraticSurd& a) { return QuadraticSurd(0) - a; }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }

 private:
  void adopt_radicand(const QuadraticSurd& o);

  Rational a_;
  Rational b_;
  Rational d_;
};

}  // namespace cevia
