#include "cevia/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "cevia/error.hpp"

namespace cevia {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // den(x)^deg * lcm(coefficient denominators) * p(x), a positive multiple.
  mpz_class scale = 1;
  for (const auto& c : c_) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.value().get_den_mpz_t());
  const mpz_class& n = x.value().get_num();
  const mpz_class& d = x.value().get_den();
  mpz_class acc = 0;
  mpz_class dpow = 1;
  mpz_class term;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    // acc holds sum_{j>i} c_j n^{j-i} d^{deg-j}; fold in c_i d^{deg-i}.
    acc *= n;
    term = it->value().get_num() * (scale / it->value().get_den());
    term *= dpow;
    acc += term;
    dpow *= d;
  }
  return sgn(acc);
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(leading().reciprocal());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0 || mag != Rational(1)) out += mag.str();
    if (k >= 1) {
      if (k == 0 || mag != Rational(1)) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv_lead = b.leading().reciprocal();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * b.coeffs()[i];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "square-free part of zero");
  if (p.degree() <= 0) return p.monic();
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.value().get_num_mpz_t());
  }
  return p.scaled(Rational(mpq_class(den, num)));
}

}  // namespace cevia
