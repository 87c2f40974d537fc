#pragma once

// Homogeneous barycentric geometry over the rationals: points, lines and
// 3x3 projective maps, plus the affine measurements (signed ratios, midpoints,
// cross ratios) that only make sense for ordinary points.

#include <array>
#include <optional>
#include <string>

#include "cevia/rational.hpp"

namespace cevia {

/// A raw coordinate triple, not yet identified up to scaling.
using Triple = std::array<Rational, 3>;

Triple operator+(const Triple& a, const Triple& b);
Triple operator-(const Triple& a, const Triple& b);
Triple operator*(const Rational& s, const Triple& a);
Rational dot(const Triple& a, const Triple& b);
Triple cross(const Triple& a, const Triple& b);
Rational det3(const Triple& a, const Triple& b, const Triple& c);
bool is_zero(const Triple& t);
/// True when a and b are nonzero multiples of each other.
bool proportional(const Triple& a, const Triple& b);
std::string to_string(const Triple& t);

namespace detail {
// Coprime integers, first nonzero entry positive.
Triple canonicalize(const Triple& t);
}  // namespace detail

/// A point of the projective plane in homogeneous barycentric coordinates.
/// Stored in canonical form so that equality is exact comparison.
class BaryPoint {
 public:
  BaryPoint(const Rational& x, const Rational& y, const Rational& z);
  explicit BaryPoint(const Triple& coords);

  const Triple& coords() const { return c_; }
  const Rational& x() const { return c_[0]; }
  const Rational& y() const { return c_[1]; }
  const Rational& z() const { return c_[2]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  Rational sum() const { return c_[0] + c_[1] + c_[2]; }
  bool is_ordinary() const { return !sum().is_zero(); }
  bool is_infinite() const { return sum().is_zero(); }

  std::string str() const { return to_string(c_); }

  friend bool operator==(const BaryPoint&, const BaryPoint&) = default;

 private:
  Triple c_;
};

/// The line lx + my + nz = 0, canonicalized like a point.
class BaryLine {
 public:
  BaryLine(const Rational& l, const Rational& m, const Rational& n);
  explicit BaryLine(const Triple& coeffs);

  const Triple& coeffs() const { return c_; }
  std::string str() const { return to_string(c_); }

  friend bool operator==(const BaryLine&, const BaryLine&) = default;

 private:
  Triple c_;
};

/// A 3x3 rational matrix acting on column vectors of barycentric coordinates.
/// Entries are kept exactly as constructed; projective identity is `equivalent`.
class ProjMap {
 public:
  using Rows = std::array<Triple, 3>;

  ProjMap() = default;
  explicit ProjMap(Rows rows) : rows_(std::move(rows)) {}

  static ProjMap identity();
  /// The complement map K.
  static ProjMap complement();
  /// The anticomplement map K^-1.
  static ProjMap anticomplement();

  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rows& rows() const { return rows_; }

  Triple operator*(const Triple& v) const;
  ProjMap operator*(const ProjMap& o) const;
  ProjMap scaled(const Rational& s) const;

  Rational determinant() const;
  ProjMap adjugate() const;
  /// Exact inverse through the adjugate; throws SingularMap.
  ProjMap inverse() const;

  /// The c with *this == c * other, if one exists.
  std::optional<Rational> ratio_to(const ProjMap& other) const;
  bool equivalent(const ProjMap& other) const { return ratio_to(other).has_value(); }

  friend bool operator==(const ProjMap&, const ProjMap&) = default;

  std::string str() const;

 private:
  Rows rows_{};
};

/// Canonical point for a nonzero triple; throws ZeroVector.
BaryPoint normalize(const Triple& t);

Rational incidence(const BaryPoint& p, const BaryLine& l);
bool lies_on(const BaryPoint& p, const BaryLine& l);

BaryLine line_through(const BaryPoint& p, const BaryPoint& q);
BaryPoint meet(const BaryLine& l, const BaryLine& m);

BaryPoint apply(const ProjMap& map, const BaryPoint& p);
BaryPoint apply(const ProjMap& map, const Triple& p);

/// The c with map * v == c * v exactly, or nullopt when v is not an eigenvector.
std::optional<Rational> eigenfactor(const ProjMap& map, const Triple& v);

bool collinear(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c);

/// Coordinates scaled to sum to one; throws InfinitePoint.
Triple to_absolute(const BaryPoint& p);

/// The t with (B - A) = t (C - B) in absolute coordinates, i.e. AB/BC.
Rational signed_ratio(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c);

/// Cross ratio (AB, CD) = (AC/CB) / (AD/DB).
///
/// Evaluated projectively as [AC][BD] / ([BC][AD]), where [PQ] is the 2x2
/// determinant of P and Q in a coordinate chart of the common line. This agrees
/// with the affine definition for ordinary points and extends it to points at
/// infinity.
Rational cross_ratio(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c,
                     const BaryPoint& d);

BaryPoint midpoint(const BaryPoint& a, const BaryPoint& b);

}  // namespace cevia
