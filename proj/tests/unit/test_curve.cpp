#include <doctest.h>

#include <cmath>

#include "cevia/curve.hpp"
#include "cevia/error.hpp"
#include "cevia/random.hpp"
#include "oracles.hpp"

using namespace cevia;

namespace {
template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no cevia::Error thrown");
  return Errc::ParseError;
}

bool all_partials_vanish(const Rational& a, const BaryPoint& p) {
  return is_zero(F_gradient(a, p.coords()));
}
}  // namespace

TEST_CASE("the cubic form") {
  CHECK(F_eval(Rational(-11), BaryPoint(1, 2, 3)).is_zero());
  CHECK(F_eval(Rational(0), BaryPoint(1, 1, 1)) == Rational(9));
  for (int a = -12; a <= 12; ++a) CHECK(F_eval(Rational(a), BaryPoint(0, 1, -1)).is_zero());
}

TEST_CASE("a of a point") {
  CHECK(a_of_point(BaryPoint(1, 2, 3)) == Rational(-11));
  CHECK(a_of_point(BaryPoint(1, 1, 1)) == Rational(-9));
  CHECK(code_of([] { a_of_point(BaryPoint(0, 1, 1)); }) == Errc::OnSideline);
  CHECK(code_of([] { a_of_point(BaryPoint(1, 2, -3)); }) == Errc::IndeterminateA);
}

TEST_CASE("membership") {
  const Curve c(Rational(-11));
  CHECK(membership(c, BaryPoint(1, 2, 3)).point() == BaryPoint(1, 2, 3));
  CHECK(code_of([&] { membership(c, BaryPoint(1, 2, 4)); }) == Errc::NotOnCurve);
}

TEST_CASE("affine normal form") {
  CHECK(affine_normal_form(Rational(-3)).sign_normalized().str() ==
        "(3*x - 1)*y^2 + (3*x^2 - 4*x + 1)*y + (-x^2 + x)");
  const AffineNormalForm zero = affine_normal_form(Rational(0));
  CHECK(zero.y2 == Polynomial{1});
  CHECK(zero.y1 == Polynomial{-1, 1});
  CHECK(zero.y0 == Polynomial{0, -1, 1});

  // Expansion oracle: F(a) restricted to z = 1 - x - y is minus the normal form.
  Sampler s(11);
  for (int i = 0; i < 40; ++i) {
    const Rational a = s.rational(), x = s.rational(), y = s.rational();
    const Rational z = Rational(1) - x - y;
    const Rational direct = x * x * (y + z) + y * y * (x + z) + z * z * (x + y) + (a + 3) * x * y * z;
    CHECK(direct == -affine_normal_form(a)(x, y));
  }
}

TEST_CASE("discriminant of the quartic") {
  CHECK(disc_d(Rational(1)) == Rational(20480));
  CHECK(disc_d(Rational(-1)).is_zero());
  CHECK(disc_d(Rational(-9)).is_zero());
  CHECK(disc_d(Rational(0)).is_zero());
  // Sylvester-resultant oracle on the hand-expanded quartic.
  Sampler s(5);
  for (int i = 0; i < 25; ++i) {
    const Rational a = s.rational();
    const auto q = oracle::quartic_of(a);
    const Polynomial d = quartic_discriminant(a).d;
    CAPTURE(a.str());
    for (int k = 0; k <= 4; ++k) CHECK(d.coeff(static_cast<std::size_t>(4 - k)) == q[static_cast<std::size_t>(k)]);
    if (!a.is_zero()) CHECK(oracle::quartic_discriminant(q) == disc_d(a));
  }
}

TEST_CASE("singular members") {
  const auto m1 = singularity_analysis(Rational(-1));
  CHECK(m1.size() == 3);
  for (const BaryPoint& p : {BaryPoint(1, -1, -1), BaryPoint(-1, 1, -1), BaryPoint(-1, -1, 1)}) {
    CHECK(std::find(m1.begin(), m1.end(), p) != m1.end());
    CHECK(all_partials_vanish(Rational(-1), p));
  }
  const auto m9 = singularity_analysis(Rational(-9));
  REQUIRE(m9.size() == 1);
  CHECK(m9[0] == BaryPoint(1, 1, 1));
  CHECK(all_partials_vanish(Rational(-9), m9[0]));
  CHECK(singularity_analysis(Rational(0)).empty());
  CHECK(singularity_analysis(Rational(2)).empty());
  CHECK_FALSE(Curve(Rational(0)).is_elliptic());
  CHECK(Curve(Rational(-1)).singular_points().size() == 3);
}

TEST_CASE("exact j-invariant") {
  CHECK(j_invariant(Rational(-3)) == Rational(0));
  CHECK(j_invariant(Rational(1)) == Rational(16384, 5));
  CHECK(j_invariant(Rational(-5)) == Rational(21296, 25));
  CHECK(code_of([] { j_invariant(Rational(-9)); }) == Errc::NotElliptic);
  // Invariant-theory oracle: j of y^2 = D(x) from the quartic's I and J.
  Sampler s(6);
  for (int i = 0; i < 25; ++i) {
    const Rational a = s.elliptic_parameter();
    CAPTURE(a.str());
    CHECK(j_invariant(a) == oracle::j_from_quartic(oracle::quartic_of(a)));
  }
}

TEST_CASE("Legendre cross-check") {
  const LegendreCheck one = legendre_check(Rational(1), 1e-9);
  CHECK(one.j.real() == doctest::Approx(3276.8).epsilon(1e-12));
  const LegendreCheck five = legendre_check(Rational(-5), 1e-9);
  CHECK(five.j.real() == doctest::Approx(851.84).epsilon(1e-12));
  CHECK(std::abs(five.j.imag()) < 1e-9);
  CHECK(code_of([] { legendre_check(Rational(0), 1e-9); }) == Errc::NotElliptic);
  CHECK(code_of([] { legendre_check(Rational(7, 3), 0.0); }) == Errc::ToleranceExceeded);
}

TEST_CASE("j inversion") {
  const auto roots = j_invert(Rational(1728), Rational(1, 10000000000));
  REQUIRE(roots.size() == 4);
  const auto expected = oracle::j1728_radicals();
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(roots[i].approx() - expected[i]) < 1e-10);

  const auto zero = j_invert(Rational(0), Rational(1, 1000000000));
  REQUIRE(zero.size() == 2);
  CHECK(zero[1].exact == Rational(-3));
  // Bisection oracle for the real root of a^3 + 9a^2 + 3a + 3.
  const double r = oracle::bisect([](double a) { return a * a * a + 9 * a * a + 3 * a + 3; }, -10, -8);
  CHECK(std::abs(zero[0].approx() - r) < 1e-9);
  CHECK(r == doctest::Approx(-8.69464420372615));

  bool found = false;
  for (const auto& iv : j_invert(Rational(16384, 5), Rational(1, 1000000))) {
    found = found || (iv.exact ? *iv.exact == Rational(1) : iv.contains(Rational(1)));
  }
  CHECK(found);
}

TEST_CASE("torsion and the chord-tangent law") {
  const Curve c(Rational(2));
  for (const auto& t : c.torsion()) CHECK(c.contains(t));
  const auto pts = torsion_points(c);
  const auto sum = chord_tangent_add(c, pts[0], pts[3]);
  CHECK(sum.point() == pts[0].point());  // A_inf is the identity

  const TorsionTable table = torsion_table(c);
  CHECK(table.identity == 3);
  CHECK(table.closed);
  CHECK(table.commutative);
  CHECK(table.associative);
  CHECK(table.cyclic);
  int order6 = 0;
  for (int o : table.order) order6 += (o == 6);
  CHECK(order6 == 2);
  CHECK(code_of([] { torsion_table(Curve(Rational(-1))); }) == Errc::NotElliptic);

  // A generic rational point: the chord through it and A lands back on the curve.
  const Curve e(Rational(-11));
  const Triple third = third_intersection(Rational(-11), Triple{1, 2, 3}, Triple{1, 0, 0});
  CHECK(e.contains(normalize(third)));
}
