#include "cevia/verify.hpp"

#include <functional>
#include <map>

#include "cevia/error.hpp"
#include "cevia/random.hpp"
#include "cevia/weierstrass.hpp"

namespace cevia {

bool VerifyReport::ok() const {
  for (const auto& t : tallies) {
    if (t.failed != 0) return false;
  }
  return true;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32U) | out[1];
}

namespace {

class Tallies {
 public:
  void check(const std::string& name, const std::string& sample, const std::function<bool()>& body) {
    InvariantTally& t = by_name_[name];
    t.name = name;
    std::string why;
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(" threw ") + e.what();
    }
    if (ok) {
      ++t.passed;
    } else {
      if (t.failed == 0) t.first_failure = sample + why;
      ++t.failed;
    }
  }

  std::vector<InvariantTally> sorted() const {
    std::vector<InvariantTally> out;
    for (const auto& [_, t] : by_name_) out.push_back(t);
    return out;
  }

 private:
  std::map<std::string, InvariantTally> by_name_;
};

template <class T>
bool proportional_over(const std::array<T, 3>& p, const std::array<T, 3>& q) {
  auto zero = [](const std::array<T, 3>& t) {
    return t[0].is_zero() && t[1].is_zero() && t[2].is_zero();
  };
  const std::array<T, 3> c{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                           p[0] * q[1] - p[1] * q[0]};
  return !zero(p) && !zero(q) && zero(c);
}

Triple ordinary_triple(Sampler& s) {
  for (;;) {
    Triple t = s.triple();
    if (!(t[0] + t[1] + t[2]).is_zero()) return t;
  }
}

void check_point(Tallies& t, Sampler& s, const BaryPoint& p, bool inject_fault) {
  const std::string tag = "P = " + p.str();
  const CevianContext ctx(p);
  const Rational& e3 = ctx.e3();
  const Rational& anti = ctx.anti_product();
  const Triple g{1, 1, 1};
  const BaryPoint centroid(1, 1, 1);

  ProjMap m = build_M(ctx);
  if (inject_fault) m(0, 0) += Rational(1);
  const ProjMap s_map = build_S(ctx);
  const ProjMap lambda = build_lambda(ctx);

  t.check("matrix_S_proportional", tag, [&] { return compose_S(ctx).equivalent(s_map); });
  t.check("matrix_lambda_proportional", tag,
          [&] { return compose_lambda(ctx).equivalent(lambda); });
  t.check("matrix_M_proportional", tag, [&] { return compose_M(ctx).equivalent(m); });

  t.check("fixed_X_eigenfactor", tag, [&] { return eigenfactor(s_map, ctx.x_raw()) == anti; });
  t.check("fixed_Z_eigenfactor", tag,
          [&] { return eigenfactor(lambda, ctx.z_raw()) == Rational(2) * e3; });
  t.check("fixed_S_eigenfactor", tag, [&] { return eigenfactor(m, ctx.s_raw()) == anti; });

  for (int i = 0; i < 3; ++i) {
    const Triple y = ordinary_triple(s);
    const Rational sum = y[0] + y[1] + y[2];
    const std::string ytag = tag + ", Y = " + to_string(y);
    t.check("affine_identity_S", ytag,
            [&] { return s_map * y == sum * ctx.x_raw() + (Rational(2) * e3) * y; });
    t.check("affine_identity_M", ytag,
            [&] { return m * y == sum * ctx.s_raw() - (Rational(4) * e3) * y; });
  }

  t.check("midpoint_Q", tag, [&] { return midpoint(ctx.p(), ctx.v_point()) == ctx.q(); });
  t.check("midpoint_Qprime", tag,
          [&] { return midpoint(ctx.p_prime(), ctx.v_point()) == ctx.q_prime(); });
  t.check("circumcenter_relation", tag, [&] {
    return anti * ctx.q_raw() == (Rational(2) * ctx.e2()) * ctx.s_raw() - ctx.o_raw();
  });
  t.check("M_maps_O_to_Q", tag, [&] { return cevia::apply(m, ctx.o_raw()) == ctx.q(); });
  t.check("O_by_maps", tag, [&] { return point_O_by_maps(ctx) == ctx.o_point(); });
  t.check("V_by_meet", tag, [&] { return point_V_by_meet(ctx) == ctx.v_point(); });
  t.check("Z_S_from_G_V", tag, [&] {
    return ctx.z_raw() == Rational(-3) * e3 * g + ctx.v_raw() &&
           ctx.s_raw() == e3 * g + ctx.v_raw();
  });
  t.check("collinear_GZVS", tag, [&] {
    const BaryPoint& z = *ctx.z_point();
    return collinear(centroid, z, ctx.v_point()) && collinear(centroid, ctx.s_point(), ctx.v_point());
  });
  t.check("collinear_centers", tag, [&] {
    const Triple y = ordinary_triple(s);
    return det3(ctx.x_raw(), y, s_map * y).is_zero() && det3(ctx.s_raw(), y, m * y).is_zero();
  });
  t.check("cross_ratio_GVSZ", tag, [&] {
    return cross_ratio(centroid, ctx.v_point(), ctx.s_point(), *ctx.z_point()) == Rational(-3);
  });
  t.check("ratio_report", tag, [&] {
    const RatioReport r = ratio_report(ctx);
    return r.gz_zv && Rational(9) * *r.gz_zv == r.a && r.sq_so && r.k && *r.k == *r.sq_so &&
           *r.k == Rational(4) / (r.a + 1) && r.cross_gvsz == Rational(-3);
  });
  t.check("involutions", tag, [&] {
    return isotomic(isotomic(p)) == p && anticomplement(complement(p)) == p &&
           complement(anticomplement(p)) == p && isotomcomplement(p) == complement(isotomic(p));
  });
  t.check("curve_membership", tag, [&] { return F_eval(a_of_point(p), p).is_zero(); });
}

void check_parameter(Tallies& t, const Rational& a, double tolerance) {
  const std::string tag = "a = " + a.str();
  const Curve curve(a);
  t.check("torsion_on_curve", tag, [&] {
    for (const auto& q : curve.torsion()) {
      if (!curve.contains(q)) return false;
    }
    return true;
  });
  t.check("legendre_cross_check", tag,
          [&] { return legendre_check(a, tolerance).relative_error <= tolerance; });
  t.check("j_invert_round_trip", tag, [&] {
    for (const auto& iv : j_invert(j_invariant(a), Rational(1, 1000000))) {
      if (iv.exact ? *iv.exact == a : iv.contains(a)) return true;
    }
    return false;
  });
  t.check("torsion_group", tag, [&] {
    const TorsionTable table = torsion_table(curve);
    return table.closed && table.identity == 3 && table.commutative && table.associative &&
           table.cyclic;
  });
}

void check_weierstrass(Tallies& t, Sampler& s) {
  const auto p = s.real_point_minus3();
  const std::string tag = "E_{-3} point x = " + p[0].str() + ", y = " + p[1].str();
  t.check("weierstrass_round_trip", tag, [&] {
    if (!cubic_form(QuadraticSurd(-3), p).is_zero()) return false;
    const auto w = weierstrass_forward(p);
    return on_weierstrass_curve(w) && proportional_over(weierstrass_inverse(w), p);
  });
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  Tallies tallies;
  for (std::size_t i = 0; i < options.samples; ++i) {
    Sampler s(sample_seed(options.seed, i));
    check_point(tallies, s, s.generic_point(), options.inject_fault);
    check_parameter(tallies, s.elliptic_parameter(), options.tolerance);
    check_weierstrass(tallies, s);
  }
  return {options.seed, options.samples, tallies.sorted()};
}

}  // namespace cevia
