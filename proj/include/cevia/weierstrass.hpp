#pragma once

// Birational map between E_{-3} and the Weierstrass curve v^2 = u^3 + 1.
//
// In the affine chart the substitution is x = u/(u-2) together with
// y = (-(3x-1)(x-1) + 4v/(u-2)^2) / (2(3x-1)). Written homogeneously in
// barycentric (X, Y, Z) it becomes
//
//   forward:  u = -2X/(Y+Z),  v = (Y+Z-2X)(Z-Y)/(Y+Z)^2
//   inverse:  (X, Y, Z) = (u(u+1), v-u-1, -(u+v+1))
//
// The forward formula fails only where Y+Z = 0; on E_{-3} that is A (sent to
// the point at infinity) and A_inf, where the curve equation gives the
// alternative u = 2(X^2+YZ)/(Y^2+Z^2). The inverse formula vanishes only at
// (-1, 0), where multiplying through by v/(u+1) gives
// (uv, u^2-u+1-v, -(u^2-u+1+v)). Both directions are templated on the field
// so they run over Q and over real quadratic extensions alike.

#include <array>
#include <stdexcept>

#include "cevia/curve.hpp"

namespace cevia {

template <class T>
struct WeierstrassPointT {
  bool at_infinity = false;
  T u{};
  T v{};
};

using WeierstrassPoint = WeierstrassPointT<Rational>;

template <class T>
bool on_weierstrass_curve(const WeierstrassPointT<T>& w) {
  return w.at_infinity || (w.v * w.v - (w.u * w.u * w.u + T(1))).is_zero();
}

/// Image of a point of E_{-3} given by homogeneous coordinates.
template <class T>
WeierstrassPointT<T> weierstrass_forward(const std::array<T, 3>& p) {
  const T& X = p[0];
  const T& Y = p[1];
  const T& Z = p[2];
  const T sigma = Y + Z;
  if (!sigma.is_zero()) {
    return {false, T(-2) * X / sigma, (sigma - T(2) * X) * (Z - Y) / (sigma * sigma)};
  }
  const T den = Y * Y + Z * Z;
  if (den.is_zero()) return {true, T(0), T(0)};
  const T u = T(2) * (X * X + Y * Z) / den;
  // Only A_inf reaches here, and it maps to the 2-torsion point with v = 0.
  if (!(u * u * u + T(1)).is_zero()) {
    throw std::logic_error("point with Y + Z = 0 is not on E_{-3}");
  }
  return {false, u, T(0)};
}

/// Homogeneous preimage of a point of v^2 = u^3 + 1 on E_{-3}.
template <class T>
std::array<T, 3> weierstrass_inverse(const WeierstrassPointT<T>& w) {
  if (w.at_infinity) return {T(1), T(0), T(0)};
  const T& u = w.u;
  const T& v = w.v;
  std::array<T, 3> p{u * (u + T(1)), v - u - T(1), -(u + v + T(1))};
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) {
    const T q = u * u - u + T(1);
    p = {u * v, q - v, -(q + v)};
  }
  return p;
}

/// Throws WrongCurve unless the point lies on E_{-3}.
WeierstrassPoint weierstrass_map_minus3(const CurvePoint& p);

/// Throws NotOnCurve unless v^2 = u^3 + 1.
CurvePoint weierstrass_inverse_minus3(const WeierstrassPoint& w);

}  // namespace cevia
