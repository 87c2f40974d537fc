#include "cevia/real_roots.hpp"

#include <algorithm>

#include "cevia/error.hpp"

namespace cevia {

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Sturm sequence of zero");
  std::vector<Polynomial> seq{p};
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps every sign, and keeps coefficient growth in check.
    seq.push_back(-primitive_part(r));
  }
  return seq;
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int leading_sign_at_infinity(const Polynomial& q, bool negative) {
  const int s = q.leading().sign();
  return (negative && q.degree() % 2 == 1) ? -s : s;
}

}  // namespace

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(q.sign_at(x));
  return count_changes(signs);
}

int sign_variations_at_neg_infinity(const std::vector<Polynomial>& seq) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(leading_sign_at_infinity(q, true));
  return count_changes(signs);
}

int sign_variations_at_pos_infinity(const std::vector<Polynomial>& seq) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(leading_sign_at_infinity(q, false));
  return count_changes(signs);
}

int count_roots(const std::vector<Polynomial>& seq, const Rational& lo, const Rational& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

int count_real_roots(const Polynomial& p) {
  const auto seq = sturm_sequence(p);
  return sign_variations_at_neg_infinity(seq) - sign_variations_at_pos_infinity(seq);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root bound of zero");
  Rational m(0);
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    m = std::max(m, (p.coeff(static_cast<std::size_t>(i)) / lead).abs());
  }
  return m + 1;
}

namespace {

bool within_power(const Rational& r, long exponent) {
  mpq_class p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_num_mpz_t(), p.get_num_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpz_mul_2exp(p.get_den_mpz_t(), p.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return abs(r.value()) <= p;
}

// A power of two strictly above every root modulus, from the bound
// 2 max |c_{n-i} / c_n|^{1/i} (the constant term halved), capped by cauchy_bound.
Rational power_of_two_bound(const Polynomial& p) {
  const int n = p.degree();
  std::vector<Rational> ratios;
  for (int i = 1; i <= n; ++i) {
    Rational r = p.coeff(static_cast<std::size_t>(n - i)) / p.leading();
    if (i == n) r /= Rational(2);
    ratios.push_back(r);
  }
  auto fits = [&](long m) {
    for (int i = 1; i <= n; ++i) {
      if (!within_power(ratios[static_cast<std::size_t>(i - 1)], m * i)) return false;
    }
    return true;
  };
  long m = 0;
  while (!fits(m)) ++m;
  while (m > -64 && fits(m - 1)) --m;
  mpq_class b = 1;
  const long e = m + 2;
  if (e >= 0) {
    mpz_mul_2exp(b.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(b.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return std::min(Rational(b), cauchy_bound(p));
}

// A split point strictly inside (lo, hi) that is not a root of p. The plain
// midpoint is tried first; on collision the point walks toward lo by halving
// offsets, and p has finitely many roots so this terminates.
Rational split_point(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / Rational(2);
  Rational step = (hi - lo) / Rational(4);
  while (p(mid).is_zero()) {
    mid -= step;
    step /= Rational(2);
  }
  return mid;
}

}  // namespace

namespace {

std::vector<IsolatingInterval> isolate_with(const Polynomial& sqf, const std::vector<Polynomial>& seq) {
  const Rational bound = power_of_two_bound(sqf);

  std::vector<IsolatingInterval> out;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int n = count_roots(seq, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({lo, hi, std::nullopt});
      continue;
    }
    const Rational mid = split_point(sqf, lo, hi);
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

IsolatingInterval refine_with(const Polynomial& sqf, const std::vector<Polynomial>& seq,
                              const IsolatingInterval& interval, const Rational& width) {
  Rational lo = interval.lo;
  Rational hi = interval.hi;
  if (!(lo < hi) || sqf(lo).is_zero() || count_roots(seq, lo, hi) != 1) {
    throw Error(Errc::NotCertified,
                "(" + lo.str() + ", " + hi.str() + "] does not isolate a single root");
  }
  if (interval.exact || hi - lo <= width) return interval;

  const int sign_lo = sqf.sign_at(lo);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / Rational(2);
    const int s = sqf.sign_at(mid);
    if (s == 0) {
      const Rational delta = std::min(width, hi - lo) / Rational(4);
      return {mid - delta, mid + delta, mid};
    }
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  IsolatingInterval result{lo, hi, std::nullopt};
  // Rational roots are recognised by their simplest representative.
  const Rational candidate = simplest_between(lo, hi);
  if (sqf(candidate).is_zero()) result.exact = candidate;
  return result;
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot isolate roots of zero");
  const Polynomial sqf = primitive_part(squarefree_part(p));
  if (sqf.degree() < 1) return {};
  return isolate_with(sqf, sturm_sequence(sqf));
}

std::vector<IsolatingInterval> real_roots(const Polynomial& p, const Rational& width) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot isolate roots of zero");
  const Polynomial sqf = primitive_part(squarefree_part(p));
  if (sqf.degree() < 1) return {};
  const auto seq = sturm_sequence(sqf);
  std::vector<IsolatingInterval> out;
  for (const auto& iv : isolate_with(sqf, seq)) out.push_back(refine_with(sqf, seq, iv, width));
  return out;
}

IsolatingInterval refine(const Polynomial& p, const IsolatingInterval& interval,
                         const Rational& width) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot refine roots of zero");
  const Polynomial sqf = primitive_part(squarefree_part(p));
  return refine_with(sqf, sturm_sequence(sqf), interval, width);
}

}  // namespace cevia
