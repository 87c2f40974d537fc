#include "cevia/random.hpp"

#include "cevia/cevian.hpp"
#include "cevia/curve.hpp"

namespace cevia {

long Sampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Sampler::rational(long bound) {
  long d = 0;
  while (d == 0) d = uniform(-bound, bound);
  return Rational(uniform(-bound, bound), d);
}

Rational Sampler::rational_in(long lo, long hi) {
  const long d = uniform(1, 20);
  return Rational(uniform(lo * d, hi * d), d);
}

Triple Sampler::triple(long bound) { return {rational(bound), rational(bound), rational(bound)}; }

BaryPoint Sampler::generic_point() {
  for (;;) {
    Triple t = triple();
    if (is_zero(t)) continue;
    BaryPoint p(t);
    if (!classify(p).any()) return p;
  }
}

Rational Sampler::elliptic_parameter() {
  for (;;) {
    Rational a = rational_in(-20, 20);
    if (is_elliptic_parameter(a)) return a;
  }
}

std::array<QuadraticSurd, 3> Sampler::real_point_minus3() {
  const Rational a(-3);
  const Polynomial disc = quartic_discriminant(a).d;
  for (;;) {
    const Rational x = rational_in(-5, 5);
    const Rational lead = a * x + 1;
    const Rational d = disc(x);
    if (lead.is_zero() || d.sign() <= 0 || exact_sqrt(d)) continue;
    // Root of (ax+1) y^2 + (ax+1)(x-1) y + x^2 - x in Q(sqrt(D(x))).
    const Rational sign = uniform(0, 1) == 0 ? Rational(1) : Rational(-1);
    const Rational two_lead = Rational(2) * lead;
    const QuadraticSurd y(-(lead * (x - 1)) / two_lead, sign / two_lead, d);
    return {QuadraticSurd(x), y, QuadraticSurd(Rational(1) - x) - y};
  }
}

}  // namespace cevia
