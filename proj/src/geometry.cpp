#include "cevia/geometry.hpp"

#include <sstream>

#include "cevia/error.hpp"

namespace cevia {

Triple operator+(const Triple& a, const Triple& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Triple operator-(const Triple& a, const Triple& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Triple operator*(const Rational& s, const Triple& a) { return {s * a[0], s * a[1], s * a[2]}; }

Rational dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Triple& a, const Triple& b, const Triple& c) { return dot(a, cross(b, c)); }

bool is_zero(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

bool proportional(const Triple& a, const Triple& b) {
  return !is_zero(a) && !is_zero(b) && is_zero(cross(a, b));
}

std::string to_string(const Triple& t) {
  return "(" + t[0].str() + ", " + t[1].str() + ", " + t[2].str() + ")";
}

namespace detail {

Triple canonicalize(const Triple& t) {
  if (is_zero(t)) throw Error(Errc::ZeroVector, "all coordinates are zero");
  mpz_class lcm_den = 1;
  for (const auto& c : t) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.value().get_den_mpz_t());
  std::array<mpz_class, 3> ints;
  mpz_class g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    mpq_class scaled = t[i].value() * lcm_den;
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  int lead_sign = 0;
  for (const auto& v : ints) {
    if (sgn(v) != 0) {
      lead_sign = sgn(v);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  Triple out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = Rational(mpz_class(ints[i] / g));
  return out;
}

}  // namespace detail

BaryPoint::BaryPoint(const Rational& x, const Rational& y, const Rational& z)
    : c_(detail::canonicalize({x, y, z})) {}

BaryPoint::BaryPoint(const Triple& coords) : c_(detail::canonicalize(coords)) {}

BaryLine::BaryLine(const Rational& l, const Rational& m, const Rational& n)
    : c_(detail::canonicalize({l, m, n})) {}

BaryLine::BaryLine(const Triple& coeffs) : c_(detail::canonicalize(coeffs)) {}

ProjMap ProjMap::identity() {
  return ProjMap({Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}});
}

ProjMap ProjMap::complement() {
  return ProjMap({Triple{0, 1, 1}, Triple{1, 0, 1}, Triple{1, 1, 0}});
}

ProjMap ProjMap::anticomplement() {
  return ProjMap({Triple{-1, 1, 1}, Triple{1, -1, 1}, Triple{1, 1, -1}});
}

Triple ProjMap::operator*(const Triple& v) const {
  return {dot(rows_[0], v), dot(rows_[1], v), dot(rows_[2], v)};
}

ProjMap ProjMap::operator*(const ProjMap& o) const {
  Rows out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      out[r][c] = rows_[r][0] * o.rows_[0][c] + rows_[r][1] * o.rows_[1][c] +
                  rows_[r][2] * o.rows_[2][c];
    }
  }
  return ProjMap(out);
}

ProjMap ProjMap::scaled(const Rational& s) const {
  return ProjMap({s * rows_[0], s * rows_[1], s * rows_[2]});
}

Rational ProjMap::determinant() const { return det3(rows_[0], rows_[1], rows_[2]); }

ProjMap ProjMap::adjugate() const {
  // Columns of the adjugate are the cross products of row pairs.
  const Triple c0 = cross(rows_[1], rows_[2]);
  const Triple c1 = cross(rows_[2], rows_[0]);
  const Triple c2 = cross(rows_[0], rows_[1]);
  return ProjMap({Triple{c0[0], c1[0], c2[0]}, Triple{c0[1], c1[1], c2[1]},
                  Triple{c0[2], c1[2], c2[2]}});
}

ProjMap ProjMap::inverse() const {
  const Rational det = determinant();
  if (det.is_zero()) throw Error(Errc::SingularMap, "matrix has zero determinant");
  return adjugate().scaled(det.reciprocal());
}

std::optional<Rational> ProjMap::ratio_to(const ProjMap& other) const {
  std::optional<Rational> c;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t k = 0; k < 3; ++k) {
      const Rational& mine = rows_[r][k];
      const Rational& theirs = other.rows_[r][k];
      if (theirs.is_zero()) {
        if (!mine.is_zero()) return std::nullopt;
        continue;
      }
      Rational q = mine / theirs;
      if (c && *c != q) return std::nullopt;
      c = std::move(q);
    }
  }
  if (!c || c->is_zero()) return std::nullopt;
  return c;
}

std::string ProjMap::str() const {
  std::ostringstream os;
  os << "[" << to_string(rows_[0]) << ", " << to_string(rows_[1]) << ", " << to_string(rows_[2])
     << "]";
  return os.str();
}

BaryPoint normalize(const Triple& t) { return BaryPoint(t); }

Rational incidence(const BaryPoint& p, const BaryLine& l) { return dot(p.coords(), l.coeffs()); }

bool lies_on(const BaryPoint& p, const BaryLine& l) { return incidence(p, l).is_zero(); }

BaryLine line_through(const BaryPoint& p, const BaryPoint& q) {
  const Triple l = cross(p.coords(), q.coords());
  if (is_zero(l)) throw Error(Errc::CoincidentPoints, p.str() + " = " + q.str());
  return BaryLine(l);
}

BaryPoint meet(const BaryLine& l, const BaryLine& m) {
  const Triple p = cross(l.coeffs(), m.coeffs());
  if (is_zero(p)) throw Error(Errc::CoincidentLines, l.str() + " = " + m.str());
  return BaryPoint(p);
}

BaryPoint apply(const ProjMap& map, const Triple& p) {
  const Triple image = map * p;
  if (is_zero(image)) throw Error(Errc::MapsToZero, to_string(p) + " lies in the kernel");
  return BaryPoint(image);
}

BaryPoint apply(const ProjMap& map, const BaryPoint& p) { return apply(map, p.coords()); }

std::optional<Rational> eigenfactor(const ProjMap& map, const Triple& v) {
  if (is_zero(v)) return std::nullopt;
  const Triple image = map * v;
  std::size_t pivot = 0;
  while (v[pivot].is_zero()) ++pivot;
  Rational c = image[pivot] / v[pivot];
  if (image != c * v) return std::nullopt;
  return c;
}

bool collinear(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

Triple to_absolute(const BaryPoint& p) {
  const Rational s = p.sum();
  if (s.is_zero()) throw Error(Errc::InfinitePoint, p.str() + " is on the line at infinity");
  const Rational inv = s.reciprocal();
  return inv * p.coords();
}

Rational signed_ratio(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c) {
  if (!collinear(a, b, c)) {
    throw Error(Errc::NotCollinear, a.str() + ", " + b.str() + ", " + c.str());
  }
  const Triple pa = to_absolute(a);
  const Triple pb = to_absolute(b);
  const Triple pc = to_absolute(c);
  const Triple ab = pb - pa;
  const Triple bc = pc - pb;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!bc[i].is_zero()) return ab[i] / bc[i];
  }
  throw Error(Errc::UndefinedRatio, "second and third points coincide");
}

Rational cross_ratio(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c,
                     const BaryPoint& d) {
  if (a == b || c == a || c == b || d == a || d == b) {
    throw Error(Errc::DegenerateConfiguration, "cross ratio needs A != B and C, D off {A, B}");
  }
  const BaryLine line = line_through(a, b);
  if (!lies_on(c, line) || !lies_on(d, line)) {
    throw Error(Errc::NotCollinear, "cross ratio of non-collinear points");
  }
  // Drop a coordinate whose line coefficient is nonzero; the other two
  // coordinates then form an injective chart of the line.
  std::size_t drop = 0;
  while (line.coeffs()[drop].is_zero()) ++drop;
  const std::size_t i = drop == 0 ? 1 : 0;
  const std::size_t j = drop == 2 ? 1 : 2;
  auto bracket = [&](const BaryPoint& p, const BaryPoint& q) {
    return p[i] * q[j] - p[j] * q[i];
  };
  const Rational den = bracket(b, c) * bracket(a, d);
  if (den.is_zero()) throw Error(Errc::DegenerateConfiguration, "zero denominator");
  return bracket(a, c) * bracket(b, d) / den;
}

BaryPoint midpoint(const BaryPoint& a, const BaryPoint& b) {
  return BaryPoint(to_absolute(a) + to_absolute(b));
}

}  // namespace cevia
