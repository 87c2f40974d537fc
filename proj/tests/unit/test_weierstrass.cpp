#include <doctest.h>

#include "cevia/error.hpp"
#include "cevia/quadratic_surd.hpp"
#include "cevia/random.hpp"
#include "cevia/weierstrass.hpp"

using namespace cevia;

TEST_CASE("quadratic surds") {
  const QuadraticSurd r(Rational(1), Rational(1), Rational(2));
  CHECK((r * r.conjugate()) == QuadraticSurd(Rational(-1)));
  CHECK(r.norm() == Rational(-1));
  CHECK((r / r) == QuadraticSurd(1));
  CHECK((r - r).is_zero());
  CHECK_THROWS_AS(QuadraticSurd(Rational(0), Rational(1), Rational(4)), std::invalid_argument);
}

TEST_CASE("torsion of E_-3 lands on v^2 = u^3 + 1") {
  const Curve c(Rational(-3));
  const auto pts = torsion_points(c);
  const WeierstrassPoint a = weierstrass_map_minus3(pts[0]);
  CHECK(a.at_infinity);
  auto uv = [&](std::size_t i) {
    const WeierstrassPoint w = weierstrass_map_minus3(pts[i]);
    REQUIRE_FALSE(w.at_infinity);
    CHECK(on_weierstrass_curve(w));
    return std::pair{w.u, w.v};
  };
  CHECK(uv(1) == std::pair{Rational(0), Rational(-1)});
  CHECK(uv(2) == std::pair{Rational(0), Rational(1)});
  CHECK(uv(3) == std::pair{Rational(-1), Rational(0)});
  CHECK(uv(4) == std::pair{Rational(2), Rational(3)});
  CHECK(uv(5) == std::pair{Rational(2), Rational(-3)});
  for (const auto& p : pts) CHECK(weierstrass_inverse_minus3(weierstrass_map_minus3(p)) == p);

  CHECK(on_weierstrass_curve(WeierstrassPoint{false, Rational(2), Rational(3)}));
  CHECK_THROWS_AS(weierstrass_inverse_minus3(WeierstrassPoint{false, Rational(1), Rational(1)}), Error);
  CHECK_THROWS_AS(weierstrass_map_minus3(membership(Curve(Rational(-11)), BaryPoint(1, 2, 3))), Error);
}

TEST_CASE("round trip over real quadratic fields") {
  Sampler s(99);
  for (int i = 0; i < 30; ++i) {
    const auto p = s.real_point_minus3();
    CHECK(cubic_form(QuadraticSurd(-3), p).is_zero());
    const auto w = weierstrass_forward(p);
    CHECK(on_weierstrass_curve(w));
    const auto back = weierstrass_inverse(w);
    // Proportional triples.
    CHECK((back[0] * p[1] - back[1] * p[0]).is_zero());
    CHECK((back[1] * p[2] - back[2] * p[1]).is_zero());
  }
}
