#include <doctest.h>

#include <random>

#include "cevia/cevian.hpp"
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

const BaryPoint P123(1, 2, 3);
}  // namespace

TEST_CASE("isotomic conjugate, complement and their composite") {
  CHECK(isotomic(BaryPoint(1, 1, 1)) == BaryPoint(1, 1, 1));
  CHECK(isotomic(P123) == BaryPoint(6, 3, 2));
  CHECK(code_of([] { isotomic(BaryPoint(0, 1, 2)); }) == Errc::OnSideline);
  CHECK(complement(BaryPoint(1, 0, 0)) == BaryPoint(0, 1, 1));
  CHECK(anticomplement(complement(P123)) == P123);
  CHECK(complement(isotomic(P123)) == BaryPoint(5, 8, 9));
  CHECK(isotomcomplement(P123) == BaryPoint(5, 8, 9));
  CHECK(isotomcomplement(BaryPoint(1, 1, 1)) == BaryPoint(1, 1, 1));
  CHECK(isotomcomplement(BaryPoint(6, 3, 2)) == BaryPoint(5, 4, 3));
}

TEST_CASE("traces and cotraces") {
  const TracePoints t = traces(P123);
  CHECK(t.d == BaryPoint(0, 2, 3));
  CHECK(t.e == BaryPoint(1, 0, 3));
  CHECK(t.f == BaryPoint(1, 2, 0));
  CHECK(traces(BaryPoint(1, 1, 1)).d == BaryPoint(0, 1, 1));
  const TracePoints c = cotraces(P123);
  CHECK(c.d == BaryPoint(0, 3, 2));
  CHECK(c.e == BaryPoint(3, 0, 1));
  CHECK(c.f == BaryPoint(2, 1, 0));
  CHECK(code_of([] { traces(BaryPoint(1, 0, 0)); }) == Errc::VertexInput);
}

TEST_CASE("degeneracy flags") {
  CHECK(classify(BaryPoint(0, 1, 2)).on_sideline);
  CHECK(classify(BaryPoint(1, -1, 2)).on_anticomplementary_side);
  const DegeneracyFlags g = classify(BaryPoint(1, 1, 1));
  CHECK(g.on_median);
  CHECK(g.z_undefined);
  CHECK(g.blocks_report());
  CHECK_FALSE(g.degenerate());
  CHECK(classify(BaryPoint(1, 2, -3)).at_infinity);
  CHECK_FALSE(classify(P123).any());
  CHECK(code_of([] { CevianContext ctx(BaryPoint(0, 1, 2)); }) == Errc::DegenerateContext);
  CHECK(code_of([] { CevianContext ctx(BaryPoint(1, 2, -1)); }) == Errc::DegenerateContext);
}

TEST_CASE("T_P against the hand-written matrix") {
  const CevianContext ctx(P123);
  // Columns are multiples of D, E, F = (0,2,3), (1,0,3), (1,2,0), scaled so
  // that Q = (5,8,9) is fixed; entries substituted by hand.
  const oracle::Matrix t{{0, 15, 20}, {24, 0, 40}, {36, 45, 0}};
  const ProjMap T = build_T_P(ctx);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) CHECK(T(r, c) == t[r][c]);
  }
  const auto q = oracle::mat_vec(t, {5, 8, 9});
  CHECK(q == std::vector<Rational>{300, 480, 540});
  CHECK(T.determinant() == oracle::determinant(t));
  CHECK(apply(T, BaryPoint(1, 0, 0)) == BaryPoint(0, 2, 3));
  CHECK(apply(T, ctx.q()) == ctx.q());
  CHECK(apply(build_T_Pprime(ctx), ctx.q_prime()) == BaryPoint(5, 4, 3));
}

TEST_CASE("closed forms agree with the compositions") {
  const CevianContext ctx(P123);
  CHECK(compose_S(ctx).equivalent(build_S(ctx)));
  CHECK(compose_lambda(ctx).equivalent(build_lambda(ctx)));
  CHECK(compose_M(ctx).equivalent(build_M(ctx)));
}

TEST_CASE("fixed points of S, lambda and M") {
  const CevianContext ctx(P123);
  const FixedPoints f = fixed_points(ctx);
  CHECK(f.x == BaryPoint(5, 16, 27));
  CHECK(f.z == BaryPoint(1, 8, 3));
  CHECK(f.s == BaryPoint(25, 32, 27));
  CHECK(apply(build_S(ctx), f.x) == f.x);
  CHECK(apply(build_lambda(ctx), f.z) == f.z);
  CHECK(eigenfactor(build_lambda(ctx), ctx.z_raw()) == Rational(12));
  CHECK(apply(build_M(ctx), f.s) == f.s);

  const CevianContext g(BaryPoint(1, 1, 1));
  CHECK_FALSE(g.z_point().has_value());
  CHECK(code_of([&] { fixed_points(g); }) == Errc::ZUndefined);
}

TEST_CASE("V and O") {
  const CevianContext ctx(P123);
  CHECK(point_V(ctx) == BaryPoint(19, 26, 21));
  CHECK(point_V_by_meet(ctx) == BaryPoint(19, 26, 21));
  CHECK(point_V(CevianContext(BaryPoint(1, 1, 1))) == BaryPoint(1, 1, 1));
  CHECK(ctx.o_factors() == Triple{10, 7, 2});
  CHECK(point_O(ctx) == BaryPoint(125, 112, 27));
  CHECK(point_O_by_maps(ctx) == BaryPoint(125, 112, 27));
  CHECK(apply(build_M(ctx), point_O(ctx)) == ctx.q());
}

TEST_CASE("ratio report for P = (1, 2, 3)") {
  const RatioReport r = ratio_report(CevianContext(P123));
  CHECK(r.a == Rational(-11));
  CHECK(r.gz_zv == Rational(-11, 9));
  CHECK(r.gs_sv == Rational(11, 3));
  CHECK(r.sq_so == Rational(-2, 5));
  CHECK(r.k == Rational(-2, 5));
  CHECK(r.cross_gvsz == Rational(-3));
  CHECK(r.homothety == HomothetyKind::homothety);
}

TEST_CASE("homothety classes at the exceptional parameters") {
  CHECK(classify_homothety(Rational(3)).kind == HomothetyKind::translation);
  CHECK_FALSE(classify_homothety(Rational(3)).k.has_value());
  CHECK(classify_homothety(Rational(-1)).kind == HomothetyKind::undefined);
  CHECK(classify_homothety(Rational(-5)).kind == HomothetyKind::half_turn);
  CHECK(classify_homothety(Rational(-5)).k == Rational(-1));
  CHECK(classify_homothety(Rational(1)).k == Rational(2));
  // F(3) = (3 - a) xyz on E_a, so S is infinite exactly when a = 3.
  const CevianContext ctx(P123);
  CHECK(ctx.F(Rational(3)) == (Rational(3) - Rational(-11)) * ctx.e3());
}

TEST_CASE("points on the special loci keep a usable context") {
  // On the Steiner circumellipse xy + yz + zx = 0: V is infinite, a is indeterminate.
  const BaryPoint p(2, 3, Rational(-6, 5));
  REQUIRE((p.x() * p.y() + p.y() * p.z() + p.z() * p.x()).is_zero());
  const CevianContext ctx(p);
  CHECK(ctx.flags().on_steiner_circumellipse);
  CHECK(ctx.flags().v_infinite);
  CHECK(ctx.v_point().is_infinite());
  CHECK(code_of([&] { a_of_point(p); }) == Errc::IndeterminateA);
}

TEST_CASE("identities hold on random points") {
  Sampler s(2024);
  for (int i = 0; i < 50; ++i) {
    const BaryPoint p = s.generic_point();
    CAPTURE(p.str());
    const CevianContext ctx(p);
    const ProjMap S = build_S(ctx), M = build_M(ctx);
    const Rational e3 = ctx.e3();
    const Triple y = s.triple();
    const Rational sum = y[0] + y[1] + y[2];
    CHECK(S * y == sum * ctx.x_raw() + (Rational(2) * e3) * y);
    CHECK(M * y == sum * ctx.s_raw() - (Rational(4) * e3) * y);
    CHECK(eigenfactor(S, ctx.x_raw()) == ctx.anti_product());
    CHECK(eigenfactor(M, ctx.s_raw()) == ctx.anti_product());
    CHECK(ctx.anti_product() * ctx.q_raw() ==
          (Rational(2) * ctx.e2()) * ctx.s_raw() - ctx.o_raw());
    const RatioReport r = ratio_report(ctx);
    CHECK(r.k == Rational(4) / (r.a + 1));
    CHECK(r.sq_so == r.k);
    CHECK(r.cross_gvsz == Rational(-3));
    CHECK(Rational(9) * *r.gz_zv == r.a);
  }
}
