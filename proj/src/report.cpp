#include "cevia/report.hpp"

#include "cevia/error.hpp"
#include "cevia/weierstrass.hpp"

namespace cevia {

Json to_json(const BaryPoint& p) {
  return Json::array({p.x().str(), p.y().str(), p.z().str()});
}

Json to_json(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

Json to_json(const IsolatingInterval& iv) {
  Json j;
  j["lo"] = iv.lo.str();
  j["hi"] = iv.hi.str();
  j["approx"] = iv.approx();
  if (iv.exact) j["exact"] = iv.exact->str();
  return j;
}

std::string_view to_string(HomothetyKind kind) {
  switch (kind) {
    case HomothetyKind::homothety: return "homothety";
    case HomothetyKind::half_turn: return "half_turn";
    case HomothetyKind::translation: return "translation";
    case HomothetyKind::undefined: return "undefined";
  }
  return "undefined";
}

Json construction_report(const CevianContext& ctx) {
  const RatioReport r = ratio_report(ctx);
  Json j;
  j["P"] = to_json(ctx.p());
  j["Pprime"] = to_json(ctx.p_prime());
  j["Q"] = to_json(ctx.q());
  j["Qprime"] = to_json(ctx.q_prime());
  j["D"] = to_json(ctx.traces().d);
  j["E"] = to_json(ctx.traces().e);
  j["F"] = to_json(ctx.traces().f);
  j["D3"] = to_json(ctx.cotraces().d);
  j["E3"] = to_json(ctx.cotraces().e);
  j["F3"] = to_json(ctx.cotraces().f);
  j["X"] = to_json(ctx.x_point());
  j["Z"] = ctx.z_point() ? to_json(*ctx.z_point()) : Json(nullptr);
  j["S"] = to_json(ctx.s_point());
  j["V"] = to_json(ctx.v_point());
  j["O"] = to_json(ctx.o_point());
  j["a"] = r.a.str();
  j["gz_zv"] = to_json(r.gz_zv);
  j["gs_sv"] = to_json(r.gs_sv);
  j["sq_so"] = to_json(r.sq_so);
  j["k"] = to_json(r.k);
  j["cross_gvsz"] = to_json(r.cross_gvsz);
  j["homothety"] = to_string(r.homothety);
  j["flags"] = ctx.flags().names();
  return j;
}

Json degenerate_report(const BaryPoint& p, const DegeneracyFlags& flags, const std::string& error) {
  Json j;
  j["P"] = to_json(p);
  j["flags"] = flags.names();
  j["error"] = error;
  return j;
}

Json curve_report(const Curve& curve, double tolerance) {
  Json j;
  j["a"] = curve.a().str();
  j["disc_d"] = curve.disc_d().str();
  j["is_elliptic"] = curve.is_elliptic();
  j["j"] = curve.is_elliptic() ? Json(j_invariant(curve.a()).str()) : Json(nullptr);
  Json torsion = Json::array();
  for (std::size_t i = 0; i < 6; ++i) {
    Json t;
    t["label"] = Curve::torsion_labels()[i];
    t["point"] = to_json(curve.torsion()[i]);
    torsion.push_back(t);
  }
  j["torsion"] = torsion;
  Json singular = Json::array();
  for (const auto& p : curve.singular_points()) singular.push_back(to_json(p));
  j["singular_points"] = singular;
  j["normal_form"] = affine_normal_form(curve.a()).sign_normalized().str();
  j["quartic"] = quartic_discriminant(curve.a()).d.str();
  if (curve.is_elliptic()) {
    Json legendre;
    try {
      const LegendreCheck lc = legendre_check(curve.a(), tolerance);
      legendre["j_real"] = lc.j.real();
      legendre["j_imag"] = lc.j.imag();
      legendre["relative_error"] = lc.relative_error;
      legendre["within_tolerance"] = true;
    } catch (const Error& e) {
      if (e.code() != Errc::ToleranceExceeded) throw;
      legendre["within_tolerance"] = false;
      legendre["error"] = e.what();
    }
    j["legendre"] = legendre;
  }
  if (curve.a() == Rational(-3)) {
    Json images = Json::array();
    for (std::size_t i = 0; i < 6; ++i) {
      const auto w = weierstrass_map_minus3(membership(curve, curve.torsion()[i]));
      Json m;
      m["label"] = Curve::torsion_labels()[i];
      if (w.at_infinity) {
        m["image"] = "infinity";
      } else {
        m["image"] = Json::array({w.u.str(), w.v.str()});
      }
      images.push_back(m);
    }
    j["weierstrass"] = {{"curve", "v^2 = u^3 + 1"}, {"torsion_images", images}};
  }
  return j;
}

Json intervals_report(const std::vector<IsolatingInterval>& intervals) {
  Json j = Json::array();
  for (const auto& iv : intervals) j.push_back(to_json(iv));
  return j;
}

Json torsion_table_report(const Curve& curve) {
  const TorsionTable t = torsion_table(curve);
  const auto& labels = Curve::torsion_labels();
  auto label = [&](int i) { return i < 0 ? Json(nullptr) : Json(labels[static_cast<std::size_t>(i)]); };
  Json j;
  j["a"] = curve.a().str();
  j["labels"] = labels;
  Json points = Json::array();
  for (const auto& p : curve.torsion()) points.push_back(to_json(p));
  j["points"] = points;
  Json table = Json::array();
  for (const auto& row : t.sum) {
    Json r = Json::array();
    for (int v : row) r.push_back(label(v));
    table.push_back(r);
  }
  j["table"] = table;
  j["identity"] = label(t.identity);
  Json orders;
  for (std::size_t i = 0; i < 6; ++i) orders[std::string(labels[i])] = t.order[i];
  j["orders"] = orders;
  j["closed"] = t.closed;
  j["commutative"] = t.commutative;
  j["associative"] = t.associative;
  j["cyclic"] = t.cyclic;
  Json gens = Json::array();
  for (int g : t.generators) gens.push_back(label(g));
  j["generators"] = gens;
  return j;
}

Json verify_report(const VerifyReport& report) {
  Json j;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  Json inv = Json::array();
  for (const auto& t : report.tallies) {
    Json e;
    e["name"] = t.name;
    e["passed"] = t.passed;
    e["failed"] = t.failed;
    if (t.failed != 0) e["first_failure"] = t.first_failure;
    inv.push_back(e);
  }
  j["invariants"] = inv;
  j["ok"] = report.ok();
  return j;
}

}  // namespace cevia
