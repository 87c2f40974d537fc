#include "cevia/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cevia/error.hpp"

namespace cevia {

Rational F_eval(const Rational& a, const Triple& p) { return cubic_form(a, p); }

Triple F_gradient(const Rational& a, const Triple& p) {
  const Rational &x = p[0], &y = p[1], &z = p[2];
  const Rational c = a + 3;
  return {Rational(2) * x * (y + z) + y * y + z * z + c * y * z,
          Rational(2) * y * (x + z) + x * x + z * z + c * x * z,
          Rational(2) * z * (x + y) + x * x + y * y + c * x * y};
}

Rational disc_d(const Rational& a) {
  return Rational(256) * a * a * (a + 1).pow(3) * (a + 9);
}

bool is_elliptic_parameter(const Rational& a) { return !disc_d(a).is_zero(); }

namespace {

void require_elliptic(const Rational& a) {
  if (!is_elliptic_parameter(a)) {
    throw Error(Errc::NotElliptic, "E_a is singular for a = " + a.str());
  }
}

const std::array<BaryPoint, 6>& torsion_set() {
  static const std::array<BaryPoint, 6> points{
      BaryPoint(1, 0, 0),  BaryPoint(0, 1, 0),  BaryPoint(0, 0, 1),
      BaryPoint(0, 1, -1), BaryPoint(1, 0, -1), BaryPoint(1, -1, 0)};
  return points;
}

}  // namespace

Curve::Curve(Rational a)
    : a_(std::move(a)),
      disc_(cevia::disc_d(a_)),
      elliptic_(!disc_.is_zero()),
      singular_(singularity_analysis(a_)) {}

const std::array<BaryPoint, 6>& Curve::torsion() const { return torsion_set(); }

const std::array<std::string_view, 6>& Curve::torsion_labels() {
  static const std::array<std::string_view, 6> labels{"A", "B", "C", "A_inf", "B_inf", "C_inf"};
  return labels;
}

CurvePoint membership(const Curve& curve, const BaryPoint& p) {
  if (!curve.contains(p)) {
    throw Error(Errc::NotOnCurve, p.str() + " is not on E_a for a = " + curve.a().str());
  }
  return CurvePoint(p, curve.a());
}

Rational a_of_point(const BaryPoint& p) {
  const Rational &x = p.x(), &y = p.y(), &z = p.z();
  const Rational e3 = x * y * z;
  if (e3.is_zero()) throw Error(Errc::OnSideline, p.str() + " has a zero coordinate");
  const Rational f0 = (x + y + z) * (x * y + y * z + z * x);
  if (f0.is_zero()) {
    throw Error(Errc::IndeterminateA,
                p.str() + " is at infinity or on the Steiner circumellipse, where V is infinite");
  }
  return -f0 / e3;
}

Rational AffineNormalForm::operator()(const Rational& x, const Rational& y) const {
  return y2(x) * y * y + y1(x) * y + y0(x);
}

AffineNormalForm AffineNormalForm::sign_normalized() const {
  const Polynomial& lead = !y2.is_zero() ? y2 : (!y1.is_zero() ? y1 : y0);
  if (lead.is_zero() || lead.leading().sign() > 0) return *this;
  return {-y2, -y1, -y0};
}

std::string AffineNormalForm::str() const {
  auto wrap = [](const Polynomial& p) {
    const auto terms = std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                     [](const Rational& c) { return !c.is_zero(); });
    return terms > 1 ? "(" + p.str() + ")" : p.str();
  };
  return wrap(y2) + "*y^2 + " + wrap(y1) + "*y + " + wrap(y0);
}

AffineNormalForm affine_normal_form(const Rational& a) {
  const Polynomial ax1({Rational(1), a});
  const Polynomial xm1({Rational(-1), Rational(1)});
  return {ax1, ax1 * xm1, Polynomial({Rational(0), Rational(-1), Rational(1)})};
}

QuarticModel quartic_discriminant(const Rational& a) {
  const Polynomial ax1({Rational(1), a});
  const Polynomial xm1({Rational(-1), Rational(1)});
  const Polynomial quad({Rational(-1), -(a + 3), a});
  return {a, ax1 * xm1 * quad};
}

namespace {

// Basis of {v : rows * v = 0} by Gauss-Jordan elimination.
std::vector<Triple> nullspace(std::array<Triple, 3> rows) {
  std::array<int, 3> pivot_col{-1, -1, -1};
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 3 && rank < 3; ++col) {
    std::size_t pick = rank;
    while (pick < 3 && rows[pick][col].is_zero()) ++pick;
    if (pick == 3) continue;
    std::swap(rows[rank], rows[pick]);
    rows[rank] = rows[rank][col].reciprocal() * rows[rank];
    for (std::size_t r = 0; r < 3; ++r) {
      if (r != rank && !rows[r][col].is_zero()) rows[r] = rows[r] - rows[r][col] * rows[rank];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  std::vector<Triple> basis;
  for (std::size_t free = 0; free < 3; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) {
      continue;
    }
    Triple v{0, 0, 0};
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[static_cast<std::size_t>(pivot_col[r])] = -rows[r][free];
    basis.push_back(v);
  }
  return basis;
}

// Real projective roots (s : t) of A s^2 + B st + C t^2, when rational.
std::vector<std::pair<Rational, Rational>> binary_quadratic_roots(const Rational& A,
                                                                  const Rational& B,
                                                                  const Rational& C) {
  std::vector<std::pair<Rational, Rational>> roots;
  if (A.is_zero()) {
    roots.emplace_back(1, 0);
    if (!B.is_zero()) roots.emplace_back(-C, B);
    return roots;
  }
  const Rational disc = B * B - Rational(4) * A * C;
  if (disc.sign() < 0) return roots;
  const auto root = exact_sqrt(disc);
  if (!root) {
    throw std::logic_error("irrational real singular points: discriminant " + disc.str());
  }
  const Rational two_a = Rational(2) * A;
  roots.emplace_back((-B + *root) / two_a, 1);
  if (!root->is_zero()) roots.emplace_back((-B - *root) / two_a, 1);
  return roots;
}

bool is_singular_at(const Rational& a, const Triple& p) { return is_zero(F_gradient(a, p)); }

}  // namespace

std::vector<BaryPoint> singularity_analysis(const Rational& a) {
  // Subtracting partials pairwise gives (y - x)((a+1)z + x + y) = 0 and its
  // cyclic images, so every singular point satisfies one of eight linear systems.
  const Rational c = a + 1;
  const std::array<std::array<Triple, 2>, 3> choices{{
      {Triple{1, -1, 0}, Triple{1, 1, c}},
      {Triple{0, 1, -1}, Triple{c, 1, 1}},
      {Triple{-1, 0, 1}, Triple{1, c, 1}},
  }};
  std::vector<BaryPoint> found;
  auto record = [&](const Triple& v) {
    if (is_zero(v) || !is_singular_at(a, v)) return;
    BaryPoint p(v);
    if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
  };
  for (unsigned mask = 0; mask < 8; ++mask) {
    const std::array<Triple, 3> rows{choices[0][mask & 1U], choices[1][(mask >> 1U) & 1U],
                                     choices[2][(mask >> 2U) & 1U]};
    const auto basis = nullspace(rows);
    if (basis.size() == 1) {
      record(basis[0]);
    } else if (basis.size() == 2) {
      // A plane of candidates: restrict dF/dx to s*b0 + t*b1 and test its roots.
      const Triple& b0 = basis[0];
      const Triple& b1 = basis[1];
      for (std::size_t k = 0; k < 3; ++k) {
        auto g = [&](const Rational& s, const Rational& t) {
          return F_gradient(a, s * b0 + t * b1)[k];
        };
        const Rational A = g(1, 0);
        const Rational C = g(0, 1);
        const Rational B = g(1, 1) - A - C;
        if (A.is_zero() && B.is_zero() && C.is_zero()) continue;
        for (const auto& [s, t] : binary_quadratic_roots(A, B, C)) record(s * b0 + t * b1);
        break;
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const BaryPoint& p, const BaryPoint& q) {
    return p.coords() < q.coords();
  });
  return found;
}

const Polynomial& j_numerator() {
  static const Polynomial n =
      Polynomial({Rational(3), Rational(1)}).pow(3) *
      Polynomial({Rational(3), Rational(3), Rational(9), Rational(1)}).pow(3);
  return n;
}

const Polynomial& j_denominator() {
  static const Polynomial d = Polynomial::monomial(Rational(1), 2) *
                              Polynomial({Rational(1), Rational(1)}).pow(3) *
                              Polynomial({Rational(9), Rational(1)});
  return d;
}

Rational j_invariant(const Rational& a) {
  require_elliptic(a);
  return j_numerator()(a) / j_denominator()(a);
}

std::complex<double> legendre_j(std::complex<double> lambda) {
  const std::complex<double> t = lambda * lambda - lambda;
  return 256.0 * std::pow(t + 1.0, 3) / (t * t);
}

LegendreCheck legendre_check(const Rational& a, double tol) {
  require_elliptic(a);
  using C = std::complex<double>;
  const double ad = a.to_double();
  // Roots of -4u^2 + (a^2+6a-3)u + 4a: c +- s with the principal square root.
  const C c((ad * ad + 6.0 * ad - 3.0) / 8.0, 0.0);
  const C s = (ad + 1.0) / 8.0 * std::sqrt(C((ad + 1.0) * (ad + 9.0), 0.0));
  LegendreCheck out;
  C alpha = c + s;
  C beta = c - s;
  // The root of smaller modulus loses digits to cancellation; recover it
  // from the product alpha * beta = -a.
  if (std::abs(alpha) < std::abs(beta)) {
    alpha = -ad / beta;
  } else {
    beta = -ad / alpha;
  }
  out.alpha = alpha;
  out.beta = beta;
  out.lambda = alpha / beta;
  // lambda^2 - lambda = lambda (lambda - 1) with lambda - 1 = 2s / beta.
  const C t = out.lambda * (2.0 * s / beta);
  out.j = 256.0 * std::pow(t + 1.0, 3) / (t * t);
  out.j_exact = j_invariant(a).to_double();
  out.relative_error = std::abs(out.j - out.j_exact) / std::max(1.0, std::abs(out.j_exact));
  if (!(out.relative_error <= tol)) {
    throw Error(Errc::ToleranceExceeded, "Legendre j for a = " + a.str() + " off by relative " +
                                             std::to_string(out.relative_error));
  }
  return out;
}

Polynomial j_inversion_polynomial(const Rational& j0) {
  return j_numerator().scaled(Rational(j0.denominator())) -
         j_denominator().scaled(Rational(j0.numerator()));
}

std::vector<IsolatingInterval> j_invert(const Rational& j0, const Rational& precision) {
  Polynomial p = j_inversion_polynomial(j0);
  // The numerator is nonzero at 0, -1, -9, so these are never roots; the
  // division below only guards the invariant.
  for (const Rational& excluded : {Rational(0), Rational(-1), Rational(-9)}) {
    while (p(excluded).is_zero()) p = divmod(p, Polynomial::root_factor(excluded)).first;
  }
  return real_roots(p, precision);
}

std::array<CurvePoint, 6> torsion_points(const Curve& curve) {
  require_elliptic(curve.a());
  const auto& t = curve.torsion();
  return {membership(curve, t[0]), membership(curve, t[1]), membership(curve, t[2]),
          membership(curve, t[3]), membership(curve, t[4]), membership(curve, t[5])};
}

Triple third_intersection(const Rational& a, const Triple& r, const Triple& s) {
  // On the line u r + v w the cubic restricts to the binary form
  //   u^3 F(r) + u^2 v (grad F(r) . w) + u v^2 (grad F(w) . r) + v^3 F(w).
  if (!proportional(r, s)) {
    const Rational g = dot(F_gradient(a, r), s);
    const Rational d = dot(F_gradient(a, s), r);
    // F(r) = F(s) = 0 leaves u v (g u + d v).
    if (g.is_zero() && d.is_zero()) throw std::logic_error("line lies on the cubic");
    return d * r - g * s;
  }
  const Triple grad = F_gradient(a, r);
  if (is_zero(grad)) throw Error(Errc::SingularAt, "gradient vanishes at " + to_string(r));
  Triple w{0, 0, 0};
  for (std::size_t k = 0; k < 3; ++k) {
    Triple e{0, 0, 0};
    e[k] = 1;
    w = cross(grad, e);
    if (!is_zero(w) && !proportional(w, r)) break;
  }
  // Tangent line: F(r) = 0 and grad F(r) . w = 0 leave v^2 (d u + f v).
  const Rational d = dot(F_gradient(a, w), r);
  const Rational f = cubic_form(a, w);
  if (d.is_zero() && f.is_zero()) throw std::logic_error("tangent line lies on the cubic");
  return f * r - d * w;
}

CurvePoint chord_tangent_add(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
  require_elliptic(curve.a());
  if (p.a() != curve.a() || q.a() != curve.a()) {
    throw Error(Errc::NotOnCurve, "summands belong to a different member of the family");
  }
  const Rational& a = curve.a();
  const Triple r = third_intersection(a, p.point().coords(), q.point().coords());
  const Triple sum = third_intersection(a, Curve::base_point().coords(), r);
  return membership(curve, BaryPoint(sum));
}

TorsionTable torsion_table(const Curve& curve) {
  const auto pts = torsion_points(curve);
  auto index_of = [&](const CurvePoint& p) {
    for (int i = 0; i < 6; ++i) {
      if (pts[static_cast<std::size_t>(i)] == p) return i;
    }
    return -1;
  };
  TorsionTable t;
  t.closed = true;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      t.sum[i][j] = index_of(chord_tangent_add(curve, pts[i], pts[j]));
      if (t.sum[i][j] < 0) t.closed = false;
    }
  }
  if (!t.closed) return t;

  for (int e = 0; e < 6 && t.identity < 0; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < 6; ++i) {
      ok = ok && t.sum[static_cast<std::size_t>(e)][i] == static_cast<int>(i) &&
           t.sum[i][static_cast<std::size_t>(e)] == static_cast<int>(i);
    }
    if (ok) t.identity = e;
  }
  t.commutative = true;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) t.commutative = t.commutative && t.sum[i][j] == t.sum[j][i];
  }
  t.associative = true;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t k = 0; k < 6; ++k) {
        const auto ij = static_cast<std::size_t>(t.sum[i][j]);
        const auto jk = static_cast<std::size_t>(t.sum[j][k]);
        t.associative = t.associative && t.sum[ij][k] == t.sum[i][jk];
      }
    }
  }
  if (t.identity < 0) return t;
  const auto id = static_cast<std::size_t>(t.identity);
  for (std::size_t i = 0; i < 6; ++i) {
    t.inverse[i] = -1;
    for (std::size_t j = 0; j < 6; ++j) {
      if (t.sum[i][j] == t.identity) t.inverse[i] = static_cast<int>(j);
    }
    std::size_t acc = i;
    int n = 1;
    while (acc != id && n <= 6) {
      acc = static_cast<std::size_t>(t.sum[acc][i]);
      ++n;
    }
    t.order[i] = acc == id ? n : -1;
    if (t.order[i] == 6) t.generators.push_back(static_cast<int>(i));
  }
  t.cyclic = !t.generators.empty();
  return t;
}

}  // namespace cevia
