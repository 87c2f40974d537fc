#include "cevia/rational.hpp"

#include <cctype>
#include <ostream>

#include "cevia/error.hpp"

namespace cevia {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::CoincidentLines: return "CoincidentLines";
    case Errc::MapsToZero: return "MapsToZero";
    case Errc::InfinitePoint: return "InfinitePoint";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::UndefinedRatio: return "UndefinedRatio";
    case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
    case Errc::SingularMap: return "SingularMap";
    case Errc::OnSideline: return "OnSideline";
    case Errc::VertexInput: return "VertexInput";
    case Errc::DegenerateContext: return "DegenerateContext";
    case Errc::ZUndefined: return "ZUndefined";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::IndeterminateA: return "IndeterminateA";
    case Errc::NotElliptic: return "NotElliptic";
    case Errc::ToleranceExceeded: return "ToleranceExceeded";
    case Errc::WrongCurve: return "WrongCurve";
    case Errc::ExceptionalPoint: return "ExceptionalPoint";
    case Errc::SingularAt: return "SingularAt";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotCertified: return "NotCertified";
  }
  return "Unknown";
}

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw Error(Errc::ParseError, "not a decimal: '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = mpq_class(digits, scale);
  } else {
    if (!all_digits(body)) {
      throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    q = mpq_class(mpz_class(std::string(body), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned e) const {
  Rational result(1);
  Rational base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string Rational::str() const { return v_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

Rational floor_of(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.value().get_num_mpz_t(), r.value().get_den_mpz_t());
  return Rational(f);
}

// Continued-fraction descent for 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  const Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  return fl + simplest_positive((hi - fl).reciprocal(), (lo - fl).reciprocal()).reciprocal();
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

}  // namespace cevia
