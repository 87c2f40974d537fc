#include <doctest.h>

#include <cmath>

#include "cevia/error.hpp"
#include "cevia/real_roots.hpp"
#include "oracles.hpp"

using namespace cevia;

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{-1, 0, 1};
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == Rational(8));
  const auto [q, r] = divmod(Polynomial{-1, 0, 0, 1}, Polynomial{-1, 1});
  CHECK(q == Polynomial{1, 1, 1});
  CHECK(r.is_zero());
  CHECK(gcd(Polynomial{-1, 0, 1}, Polynomial{1, 2, 1}) == Polynomial{1, 1});
  CHECK(squarefree_part(Polynomial{-1, 3, -3, 1}) == Polynomial{-1, 1});
  CHECK(primitive_part(Polynomial{Rational(1, 2), Rational(-3, 4)}) == Polynomial{2, -3});
  for (int x = -4; x <= 4; ++x) {
    const Polynomial f{Rational(3, 7), -2, 0, Rational(-5, 3), 1};
    CHECK(f.sign_at(Rational(x, 3)) == f(Rational(x, 3)).sign());
  }
}

TEST_CASE("Sturm sequences") {
  const auto seq = sturm_sequence(Polynomial{-1, 0, 1});
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == Polynomial{-1, 0, 1});
  CHECK(seq[1] == Polynomial{0, 2});
  CHECK(seq[2] == Polynomial{1});
  CHECK(count_real_roots(Polynomial{1, 0, 1}) == 0);
  CHECK(count_real_roots(Polynomial{-3, 6, 1}) == 2);
  CHECK(count_real_roots(Polynomial{9, 36, 30, 12, 1}) == 2);
  CHECK_THROWS_AS(sturm_sequence(Polynomial{}), Error);
}

TEST_CASE("root isolation") {
  const auto quad = isolate_roots(Polynomial{-3, 6, 1});
  REQUIRE(quad.size() == 2);
  CHECK(quad[0].contains(Rational(-6465, 1000)));
  CHECK(quad[1].lo < Rational(4641, 10000));

  const auto quartic = isolate_roots(Polynomial{9, 36, 30, 12, 1});
  REQUIRE(quartic.size() == 2);
  CHECK(quartic[1].hi <= Rational(0));

  const auto cube = isolate_roots(Polynomial{-1, 3, -3, 1});
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].contains(Rational(1)));

  CHECK(cauchy_bound(Polynomial{-6, 1, 1}) == Rational(7));
}

TEST_CASE("refinement") {
  const Polynomial p{-2, 0, 1};
  const IsolatingInterval iv = refine(p, {Rational(1), Rational(2), std::nullopt}, Rational(1, 1000));
  CHECK(iv.width() <= Rational(1, 1000));
  CHECK(iv.lo.to_double() < std::sqrt(2.0));
  CHECK(iv.hi.to_double() >= std::sqrt(2.0));

  const IsolatingInterval wide{Rational(1), Rational(2), std::nullopt};
  const IsolatingInterval same = refine(p, wide, Rational(5));
  CHECK(same.lo == wide.lo);
  CHECK(same.hi == wide.hi);

  // Exact rational roots are recognized.
  const IsolatingInterval third = refine(Polynomial{-1, 3}, {Rational(0), Rational(1), std::nullopt}, Rational(1, 100));
  CHECK(third.exact == Rational(1, 3));

  CHECK_THROWS_AS(refine(Polynomial{-1, 0, 1}, {Rational(-2), Rational(2), std::nullopt}, Rational(1, 10)),
                  Error);
}

TEST_CASE("refined roots agree with a bisection oracle") {
  const Polynomial p{3, 3, 9, 1};
  const auto roots = real_roots(p, Rational(1, 1000000000000));
  REQUIRE(roots.size() == 1);
  const double r = oracle::bisect([](double a) { return a * a * a + 9 * a * a + 3 * a + 3; }, -10, -8);
  CHECK(std::abs(roots[0].approx() - r) < 1e-12);
}
