#include "cevia/quadratic_surd.hpp"

#include <cmath>
#include <stdexcept>

#include "cevia/error.hpp"

namespace cevia {

QuadraticSurd::QuadraticSurd(const Rational& a, const Rational& b, const Rational& d)
    : a_(a), b_(b), d_(b.is_zero() ? Rational(0) : d) {
  if (!b_.is_zero() && exact_sqrt(d_)) {
    throw std::invalid_argument("radicand " + d_.str() + " is a rational square");
  }
}

void QuadraticSurd::adopt_radicand(const QuadraticSurd& o) {
  if (o.b_.is_zero()) return;
  if (b_.is_zero()) {
    d_ = o.d_;
  } else if (d_ != o.d_) {
    throw std::invalid_argument("mixing radicands " + d_.str() + " and " + o.d_.str());
  }
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(a_, -b_, d_); }

double QuadraticSurd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

std::string QuadraticSurd::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + " + (" + b_.str() + ")*sqrt(" + d_.str() + ")";
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  adopt_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
  adopt_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  adopt_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in Q(sqrt d)");
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

}  // namespace cevia
