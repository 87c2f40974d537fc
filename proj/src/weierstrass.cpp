#include "cevia/weierstrass.hpp"

#include "cevia/error.hpp"

namespace cevia {

WeierstrassPoint weierstrass_map_minus3(const CurvePoint& p) {
  if (p.a() != Rational(-3)) {
    throw Error(Errc::WrongCurve, "the Weierstrass map is defined on E_{-3}, got a = " + p.a().str());
  }
  return weierstrass_forward(p.point().coords());
}

CurvePoint weierstrass_inverse_minus3(const WeierstrassPoint& w) {
  if (!on_weierstrass_curve(w)) {
    throw Error(Errc::NotOnCurve,
                "(" + w.u.str() + ", " + w.v.str() + ") is not on v^2 = u^3 + 1");
  }
  static const Curve e_minus3(Rational(-3));
  return membership(e_minus3, BaryPoint(weierstrass_inverse(w)));
}

}  // namespace cevia
