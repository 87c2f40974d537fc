#pragma once

// Sturm-sequence real root isolation with exact rational endpoints.

#include <optional>
#include <vector>

#include "cevia/polynomial.hpp"
#include "cevia/rational.hpp"

namespace cevia {

/// Open-closed interval (lo, hi] holding exactly one real root of a polynomial.
/// When bisection lands on the root itself, `exact` records it.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  /// Decimal estimate: the exact root when known, else the midpoint.
  double approx() const { return exact ? exact->to_double() : midpoint().to_double(); }
  bool contains(const Rational& x) const { return lo < x && x <= hi; }
};

/// p, p', then negated remainders, each rescaled by a positive constant to coprime integers.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign changes of the sequence evaluated at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& seq, const Rational& x);
int sign_variations_at_neg_infinity(const std::vector<Polynomial>& seq);
int sign_variations_at_pos_infinity(const std::vector<Polynomial>& seq);

/// Distinct real roots in (lo, hi].
int count_roots(const std::vector<Polynomial>& seq, const Rational& lo, const Rational& hi);
/// Distinct real roots on the whole line.
int count_real_roots(const Polynomial& p);

/// 1 + max |c_i / c_n|; every complex root has modulus strictly below it.
Rational cauchy_bound(const Polynomial& p);

/// Disjoint certified intervals, sorted ascending, one per distinct real root.
std::vector<IsolatingInterval> isolate_roots(const Polynomial& p);

/// Bisects a certified interval until its width is at most `width`.
/// Throws NotCertified when the interval does not isolate exactly one root.
IsolatingInterval refine(const Polynomial& p, const IsolatingInterval& interval,
                         const Rational& width);

/// isolate_roots followed by refine on each interval, sharing one Sturm sequence.
std::vector<IsolatingInterval> real_roots(const Polynomial& p, const Rational& width);

}  // namespace cevia
