#include "cevia/cevian.hpp"

#include <stdexcept>

#include "cevia/error.hpp"

namespace cevia {

bool DegeneracyFlags::any() const {
  return on_sideline || on_anticomplementary_side || on_median || at_infinity ||
         on_steiner_circumellipse || z_undefined || z_infinite || v_infinite || s_infinite;
}

std::vector<std::string> DegeneracyFlags::names() const {
  std::vector<std::string> out;
  if (on_sideline) out.emplace_back("on_sideline");
  if (on_anticomplementary_side) out.emplace_back("on_anticomplementary_side");
  if (on_median) out.emplace_back("on_median");
  if (at_infinity) out.emplace_back("at_infinity");
  if (on_steiner_circumellipse) out.emplace_back("on_steiner_circumellipse");
  if (z_undefined) out.emplace_back("z_undefined");
  if (z_infinite) out.emplace_back("z_infinite");
  if (v_infinite) out.emplace_back("v_infinite");
  if (s_infinite) out.emplace_back("s_infinite");
  return out;
}

DegeneracyFlags classify(const BaryPoint& p) {
  const Rational &x = p.x(), &y = p.y(), &z = p.z();
  const Rational e1 = x + y + z;
  const Rational e2 = x * y + y * z + z * x;
  const Rational e3 = x * y * z;
  DegeneracyFlags f;
  f.on_sideline = e3.is_zero();
  f.on_anticomplementary_side = ((x + y) * (x + z) * (y + z)).is_zero();
  f.on_median = x == y || y == z || z == x;
  f.at_infinity = e1.is_zero();
  f.on_steiner_circumellipse = e2.is_zero();
  f.z_undefined = x == y && y == z;
  f.z_infinite = !f.z_undefined && (e1 * e2 - Rational(9) * e3).is_zero();
  f.v_infinite = (e1 * e2).is_zero();
  f.s_infinite = (e1 * e2 + Rational(3) * e3).is_zero();
  return f;
}

BaryPoint isotomic(const BaryPoint& p) {
  if ((p.x() * p.y() * p.z()).is_zero()) {
    throw Error(Errc::OnSideline, p.str() + " has a zero coordinate");
  }
  return BaryPoint(p.y() * p.z(), p.x() * p.z(), p.x() * p.y());
}

BaryPoint complement(const BaryPoint& p) { return cevia::apply(ProjMap::complement(), p); }

BaryPoint anticomplement(const BaryPoint& p) { return cevia::apply(ProjMap::anticomplement(), p); }

BaryPoint isotomcomplement(const BaryPoint& p) {
  if ((p.x() * p.y() * p.z()).is_zero()) {
    throw Error(Errc::OnSideline, p.str() + " has a zero coordinate");
  }
  const Rational &x = p.x(), &y = p.y(), &z = p.z();
  return BaryPoint(x * (y + z), y * (x + z), z * (x + y));
}

namespace {

bool is_vertex(const BaryPoint& p) {
  int zeros = 0;
  for (const auto& c : p.coords()) zeros += c.is_zero() ? 1 : 0;
  return zeros == 2;
}

DegeneracyFlags checked_flags(const BaryPoint& p) {
  DegeneracyFlags f = classify(p);
  if (f.degenerate()) {
    throw Error(Errc::DegenerateContext,
                p.str() + " lies on a side of ABC or of its anticomplementary triangle");
  }
  return f;
}

Rational sq(const Rational& r) { return r * r; }

}  // namespace

TracePoints traces(const BaryPoint& p) {
  if (is_vertex(p)) throw Error(Errc::VertexInput, p.str() + " is a vertex");
  const Rational &x = p.x(), &y = p.y(), &z = p.z();
  return {BaryPoint(0, y, z), BaryPoint(x, 0, z), BaryPoint(x, y, 0)};
}

TracePoints cotraces(const BaryPoint& p) {
  if (is_vertex(p)) throw Error(Errc::VertexInput, p.str() + " is a vertex");
  const Rational &x = p.x(), &y = p.y(), &z = p.z();
  return {BaryPoint(0, z, y), BaryPoint(z, 0, x), BaryPoint(y, x, 0)};
}

CevianContext::CevianContext(const BaryPoint& p)
    : p_(p),
      flags_(checked_flags(p)),
      e1_(p.x() + p.y() + p.z()),
      e2_(p.x() * p.y() + p.y() * p.z() + p.z() * p.x()),
      e3_(p.x() * p.y() * p.z()),
      anti_((p.x() + p.y()) * (p.x() + p.z()) * (p.y() + p.z())),
      q_raw_{p.x() * (p.y() + p.z()), p.y() * (p.x() + p.z()), p.z() * (p.x() + p.y())},
      q_prime_raw_{p.y() + p.z(), p.x() + p.z(), p.x() + p.y()},
      o_factors_{e2_ - sq(p.x()), e2_ - sq(p.y()), e2_ - sq(p.z())},
      x_raw_{p.x() * q_raw_[0], p.y() * q_raw_[1], p.z() * q_raw_[2]},
      z_raw_{p.x() * sq(p.y() - p.z()), p.y() * sq(p.z() - p.x()), p.z() * sq(p.x() - p.y())},
      s_raw_{p.x() * sq(p.y() + p.z()), p.y() * sq(p.x() + p.z()), p.z() * sq(p.x() + p.y())},
      v_raw_{p.x() * (sq(p.y()) + p.y() * p.z() + sq(p.z())),
             p.y() * (sq(p.x()) + p.x() * p.z() + sq(p.z())),
             p.z() * (sq(p.x()) + p.x() * p.y() + sq(p.y()))},
      o_raw_{s_raw_[0] * o_factors_[0], s_raw_[1] * o_factors_[1], s_raw_[2] * o_factors_[2]},
      p_prime_(p.y() * p.z(), p.x() * p.z(), p.x() * p.y()),
      q_(q_raw_),
      q_prime_(q_prime_raw_),
      traces_(cevia::traces(p)),
      cotraces_(cevia::cotraces(p)),
      x_point_(x_raw_),
      z_point_(flags_.z_undefined ? std::nullopt : std::optional<BaryPoint>(BaryPoint(z_raw_))),
      s_point_(s_raw_),
      v_point_(v_raw_),
      o_point_(o_raw_) {}

ProjMap build_T_P(const CevianContext& ctx) {
  const Rational &x = ctx.x(), &y = ctx.y(), &z = ctx.z();
  const Triple& q = ctx.q_factors();
  return ProjMap({Triple{0, q[0] * (x + y), q[0] * (x + z)},
                  Triple{q[1] * (x + y), 0, q[1] * (y + z)},
                  Triple{q[2] * (x + z), q[2] * (y + z), 0}});
}

ProjMap build_T_Pprime(const CevianContext& ctx) {
  const Rational &x = ctx.x(), &y = ctx.y(), &z = ctx.z();
  const Triple& q = ctx.q_factors();
  return ProjMap({Triple{0, q[2] * (y + z), q[1] * (y + z)},
                  Triple{q[2] * (x + z), 0, q[0] * (x + z)},
                  Triple{q[1] * (x + y), q[0] * (x + y), 0}});
}

ProjMap build_S(const CevianContext& ctx) {
  const Rational &x = ctx.x(), &y = ctx.y(), &z = ctx.z();
  const Triple& q = ctx.q_factors();
  const Rational xx = x * q[0], yy = y * q[1], zz = z * q[2];
  return ProjMap({Triple{x * (q[1] + q[2]), xx, xx},
                  Triple{yy, y * (q[0] + q[2]), yy},
                  Triple{zz, zz, z * (q[0] + q[1])}});
}

ProjMap build_lambda(const CevianContext& ctx) {
  const Rational &x = ctx.x(), &y = ctx.y(), &z = ctx.z();
  const Rational yz = y * z, xz = x * z, xy = x * y;
  return ProjMap({Triple{yz * (y + z), xz * (y - z), xy * (z - y)},
                  Triple{yz * (x - z), xz * (x + z), xy * (z - x)},
                  Triple{yz * (x - y), xz * (y - x), xy * (x + y)}});
}

ProjMap build_M(const CevianContext& ctx) {
  const Rational &x = ctx.x(), &y = ctx.y(), &z = ctx.z();
  const Rational a = x * sq(y + z), b = y * sq(x + z), c = z * sq(x + y);
  return ProjMap({Triple{x * sq(y - z), a, a},
                  Triple{b, y * sq(x - z), b},
                  Triple{c, c, z * sq(x - y)}});
}

ProjMap compose_S(const CevianContext& ctx) { return build_T_P(ctx) * build_T_Pprime(ctx); }

ProjMap compose_lambda(const CevianContext& ctx) {
  return build_T_Pprime(ctx) * build_T_P(ctx).inverse();
}

ProjMap compose_M(const CevianContext& ctx) {
  return build_T_P(ctx) * ProjMap::anticomplement() * build_T_Pprime(ctx);
}

FixedPoints fixed_points(const CevianContext& ctx) {
  if (!ctx.z_point()) {
    throw Error(Errc::ZUndefined, "P = G makes every coordinate of Z vanish");
  }
  return {ctx.x_point(), *ctx.z_point(), ctx.s_point()};
}

BaryPoint point_V(const CevianContext& ctx) { return ctx.v_point(); }

BaryPoint point_V_by_meet(const CevianContext& ctx) {
  const BaryLine pq = line_through(ctx.p(), ctx.q());
  const BaryLine pq_prime = line_through(ctx.p_prime(), ctx.q_prime());
  return meet(pq, pq_prime);
}

BaryPoint point_O(const CevianContext& ctx) { return ctx.o_point(); }

BaryPoint point_O_by_maps(const CevianContext& ctx) {
  const ProjMap t_inv = build_T_Pprime(ctx).inverse();
  return cevia::apply(t_inv * ProjMap::complement(), ctx.q_raw());
}

HomothetyClass classify_homothety(const Rational& a) {
  if (a == Rational(-1)) return {HomothetyKind::undefined, std::nullopt};
  if (a == Rational(3)) return {HomothetyKind::translation, std::nullopt};
  Rational k = Rational(4) / (a + 1);
  return {k == Rational(-1) ? HomothetyKind::half_turn : HomothetyKind::homothety, k};
}

namespace {

void require_same(const char* what, const Rational& closed, const Rational& measured) {
  if (closed != measured) {
    throw std::logic_error(std::string(what) + ": closed form " + closed.str() +
                           " disagrees with measured " + measured.str());
  }
}

// (image - center) / (preimage - center) for a point and its image under a
// homothety, all ordinary.
Rational homothety_ratio(const BaryPoint& center, const BaryPoint& preimage,
                         const BaryPoint& image) {
  const Triple c = to_absolute(center);
  const Triple from = to_absolute(preimage) - c;
  const Triple to = to_absolute(image) - c;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!from[i].is_zero()) return to[i] / from[i];
  }
  throw Error(Errc::UndefinedRatio, "preimage coincides with the center");
}

}  // namespace

RatioReport ratio_report(const CevianContext& ctx) {
  const DegeneracyFlags& f = ctx.flags();
  const BaryPoint g(1, 1, 1);
  RatioReport r;
  r.a = -ctx.F(0) / ctx.e3();

  const bool v_ordinary = ctx.v_point().is_ordinary();
  const bool s_ordinary = ctx.s_point().is_ordinary();
  const bool z_ordinary = ctx.z_point() && ctx.z_point()->is_ordinary();

  if (z_ordinary && v_ordinary) {
    Rational closed = -ctx.F(0) / (Rational(9) * ctx.e3());
    require_same("GZ/ZV", closed, signed_ratio(g, *ctx.z_point(), ctx.v_point()));
    require_same("a = 9 GZ/ZV", r.a, Rational(9) * closed);
    r.gz_zv = closed;
  }
  if (s_ordinary && v_ordinary) {
    Rational closed = ctx.F(0) / (Rational(3) * ctx.e3());
    require_same("GS/SV", closed, signed_ratio(g, ctx.s_point(), ctx.v_point()));
    r.gs_sv = closed;
  }
  if (s_ordinary && !f.on_steiner_circumellipse) {
    Rational closed = Rational(-4) * ctx.e3() / ctx.anti_product();
    // signed_ratio gives SQ/QO; SO = SQ + QO turns it into SQ/SO.
    const Rational sq_qo = signed_ratio(ctx.s_point(), ctx.q(), ctx.o_point());
    require_same("SQ/SO", closed, sq_qo / (sq_qo + 1));
    const BaryPoint vertex(1, 0, 0);
    const Rational from_map = homothety_ratio(ctx.s_point(), vertex, cevia::apply(build_M(ctx), vertex));
    require_same("homothety ratio of M", closed, from_map);
    const HomothetyClass h = classify_homothety(r.a);
    if (!h.k) throw std::logic_error("ordinary S with a = " + r.a.str());
    require_same("k = 4/(a+1)", closed, *h.k);
    r.sq_so = closed;
    r.k = closed;
  }
  if (ctx.z_point()) {
    const BaryPoint& z = *ctx.z_point();
    const BaryPoint& v = ctx.v_point();
    const BaryPoint& s = ctx.s_point();
    if (g != v && s != g && s != v && z != g && z != v) {
      require_same("(GV,SZ)", Rational(-3), cross_ratio(g, v, s, z));
      r.cross_gvsz = Rational(-3);
    }
  }
  r.homothety = classify_homothety(r.a).kind;
  return r;
}

}  // namespace cevia
