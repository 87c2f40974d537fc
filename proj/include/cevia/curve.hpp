#pragma once

// The cubic family E_a : x^2(y+z) + y^2(x+z) + z^2(x+y) + (a+3)xyz = 0.

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "cevia/geometry.hpp"
#include "cevia/polynomial.hpp"
#include "cevia/real_roots.hpp"

namespace cevia {

/// The cubic form F(a) evaluated at a coordinate triple over any field.
template <class T>
T cubic_form(const T& a, const std::array<T, 3>& p) {
  const T& x = p[0];
  const T& y = p[1];
  const T& z = p[2];
  return x * x * (y + z) + y * y * (x + z) + z * z * (x + y) + (a + T(3)) * x * y * z;
}

Rational F_eval(const Rational& a, const Triple& p);
inline Rational F_eval(const Rational& a, const BaryPoint& p) { return F_eval(a, p.coords()); }
/// (dF/dx, dF/dy, dF/dz).
Triple F_gradient(const Rational& a, const Triple& p);

/// 256 a^2 (a+1)^3 (a+9).
Rational disc_d(const Rational& a);
/// a is not one of 0, -1, -9.
bool is_elliptic_parameter(const Rational& a);

/// The member E_a of the family with its derived invariants.
class Curve {
 public:
  explicit Curve(Rational a);

  const Rational& a() const { return a_; }
  const Rational& disc_d() const { return disc_; }
  bool is_elliptic() const { return elliptic_; }
  /// A, B, C, A_inf, B_inf, C_inf; on every member of the family.
  const std::array<BaryPoint, 6>& torsion() const;
  static const std::array<std::string_view, 6>& torsion_labels();
  /// Real singular points; empty for elliptic members.
  const std::vector<BaryPoint>& singular_points() const { return singular_; }

  bool contains(const BaryPoint& p) const { return F_eval(a_, p).is_zero(); }
  /// The base point A_inf = (0, 1, -1).
  static BaryPoint base_point() { return BaryPoint(0, 1, -1); }

 private:
  Rational a_;
  Rational disc_;
  bool elliptic_;
  std::vector<BaryPoint> singular_;
};

/// A point certified to lie on E_a.
class CurvePoint {
 public:
  const BaryPoint& point() const { return p_; }
  const Rational& a() const { return a_; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  friend CurvePoint membership(const Curve& curve, const BaryPoint& p);
  CurvePoint(BaryPoint p, Rational a) : p_(std::move(p)), a_(std::move(a)) {}
  BaryPoint p_;
  Rational a_;
};

/// Throws NotOnCurve.
CurvePoint membership(const Curve& curve, const BaryPoint& p);

/// -(x+y+z)(xy+yz+zx)/(xyz), the unique a with P on E_a.
/// Throws OnSideline, and IndeterminateA when P is at infinity or on the
/// Steiner circumellipse (the formula gives a = 0 but V is infinite there).
Rational a_of_point(const BaryPoint& p);

/// (ax+1) y^2 + (ax+1)(x-1) y + x^2 - x in the chart z = 1 - x - y.
struct AffineNormalForm {
  Polynomial y2;  ///< coefficient of y^2, a polynomial in x
  Polynomial y1;
  Polynomial y0;

  Rational operator()(const Rational& x, const Rational& y) const;
  /// Multiplied by -1 if needed so that the y^2 coefficient has positive leading term.
  AffineNormalForm sign_normalized() const;
  std::string str() const;
  friend bool operator==(const AffineNormalForm&, const AffineNormalForm&) = default;
};

AffineNormalForm affine_normal_form(const Rational& a);

/// Y^2 = D(x) with D the y-discriminant of the normal form.
struct QuarticModel {
  Rational a;
  Polynomial d;  ///< (ax+1)(x-1)(ax^2-(a+3)x-1), expanded
};

QuarticModel quartic_discriminant(const Rational& a);

/// Real points where all three partials of F(a) vanish.
std::vector<BaryPoint> singularity_analysis(const Rational& a);

/// (a+3)^3 (a^3+9a^2+3a+3)^3.
const Polynomial& j_numerator();
/// a^2 (a+1)^3 (a+9).
const Polynomial& j_denominator();

/// Exact j-invariant of E_a; throws NotElliptic.
Rational j_invariant(const Rational& a);

/// Floating-point j-invariant routed through the Legendre form.
struct LegendreCheck {
  std::complex<double> alpha;
  std::complex<double> beta;
  std::complex<double> lambda;
  std::complex<double> j;
  double j_exact = 0.0;
  double relative_error = 0.0;  ///< |j - j_exact| / max(1, |j_exact|)
};

/// 2^8 (l^2 - l + 1)^3 / (l^2 - l)^2.
std::complex<double> legendre_j(std::complex<double> lambda);

/// Throws NotElliptic, or ToleranceExceeded when the relative error exceeds tol.
LegendreCheck legendre_check(const Rational& a, double tol);

/// den(j0) N(a) - num(j0) D(a), whose real roots outside {0,-1,-9} are the a with j(E_a) = j0.
Polynomial j_inversion_polynomial(const Rational& j0);

/// Every real a with j(E_a) = j0, as certified intervals of width <= precision.
std::vector<IsolatingInterval> j_invert(const Rational& j0, const Rational& precision);

/// The six torsion points as CurvePoints; throws NotElliptic.
std::array<CurvePoint, 6> torsion_points(const Curve& curve);

/// Third intersection of E_a with the line through r and s (the tangent when
/// r = s). Inputs must lie on the curve.
Triple third_intersection(const Rational& a, const Triple& r, const Triple& s);

/// p + q for the chord-tangent law with identity A_inf; throws NotElliptic.
CurvePoint chord_tangent_add(const Curve& curve, const CurvePoint& p, const CurvePoint& q);

/// Addition table of the six torsion points, indexed as in Curve::torsion().
struct TorsionTable {
  std::array<std::array<int, 6>, 6> sum{};
  int identity = -1;
  std::array<int, 6> order{};
  std::array<int, 6> inverse{};
  bool closed = false;
  bool commutative = false;
  bool associative = false;
  bool cyclic = false;
  std::vector<int> generators;
};

/// Throws NotElliptic.
TorsionTable torsion_table(const Curve& curve);

}  // namespace cevia
