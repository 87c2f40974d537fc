#pragma once

// Cevian constructions driven by a point P = (x, y, z): isotomic conjugate,
// complement, the affine maps T_P, T_P', S, lambda and M, their fixed points,
// the points V and O, and the ratio identities that tie them together.

#include <optional>
#include <string>
#include <vector>

#include "cevia/geometry.hpp"

namespace cevia {

/// Where P sits relative to the loci on which some construction breaks down.
struct DegeneracyFlags {
  bool on_sideline = false;                ///< xyz = 0
  bool on_anticomplementary_side = false;  ///< (x+y)(x+z)(y+z) = 0
  bool on_median = false;                  ///< x = y, y = z or z = x
  bool at_infinity = false;                ///< x + y + z = 0
  bool on_steiner_circumellipse = false;   ///< xy + yz + zx = 0, so P' is infinite
  bool z_undefined = false;                ///< x = y = z zeroes the triple of Z
  bool z_infinite = false;                 ///< F(-9) = 0
  bool v_infinite = false;                 ///< F(0) = 0
  bool s_infinite = false;                 ///< F(3) = 0, M is a translation

  /// P cannot drive a context at all.
  bool degenerate() const { return on_sideline || on_anticomplementary_side; }
  /// Some named point or ratio is unavailable.
  bool blocks_report() const { return degenerate() || z_undefined; }
  bool any() const;
  std::vector<std::string> names() const;
};

DegeneracyFlags classify(const BaryPoint& p);

BaryPoint isotomic(const BaryPoint& p);
BaryPoint complement(const BaryPoint& p);
BaryPoint anticomplement(const BaryPoint& p);
/// Q = K(iota(P)) = (x(y+z), y(x+z), z(x+y)).
BaryPoint isotomcomplement(const BaryPoint& p);

struct TracePoints {
  BaryPoint d;
  BaryPoint e;
  BaryPoint f;
};

/// D = (0,y,z), E = (x,0,z), F = (x,y,0); throws VertexInput.
TracePoints traces(const BaryPoint& p);
/// Traces of P': D3 = (0,z,y), E3 = (z,0,x), F3 = (y,x,0).
TracePoints cotraces(const BaryPoint& p);

/// Every point and scalar derived from a non-degenerate P, computed once.
///
/// The raw triples are the closed-form coordinate expressions before any
/// rescaling; the eigenfactor and linear-combination identities are stated
/// for exactly these representatives.
class CevianContext {
 public:
  /// Throws DegenerateContext when P is on a side of ABC or of its
  /// anticomplementary triangle.
  explicit CevianContext(const BaryPoint& p);

  const DegeneracyFlags& flags() const { return flags_; }

  const Triple& p_raw() const { return p_.coords(); }
  const Rational& x() const { return p_.x(); }
  const Rational& y() const { return p_.y(); }
  const Rational& z() const { return p_.z(); }

  /// x + y + z, xy + yz + zx, xyz.
  const Rational& e1() const { return e1_; }
  const Rational& e2() const { return e2_; }
  const Rational& e3() const { return e3_; }
  /// (x+y)(x+z)(y+z).
  const Rational& anti_product() const { return anti_; }
  /// F(a) = x^2(y+z) + y^2(x+z) + z^2(x+y) + (a+3)xyz = e1 e2 + a e3.
  Rational F(const Rational& a) const { return e1_ * e2_ + a * e3_; }

  /// (x', y', z') = (x(y+z), y(x+z), z(x+y)).
  const Triple& q_factors() const { return q_raw_; }
  /// (x'', y'', z'') = (e2 - x^2, e2 - y^2, e2 - z^2).
  const Triple& o_factors() const { return o_factors_; }

  const BaryPoint& p() const { return p_; }
  const BaryPoint& p_prime() const { return p_prime_; }
  const BaryPoint& q() const { return q_; }
  const BaryPoint& q_prime() const { return q_prime_; }
  const TracePoints& traces() const { return traces_; }
  const TracePoints& cotraces() const { return cotraces_; }
  const BaryPoint& x_point() const { return x_point_; }
  /// Nullopt exactly when flags().z_undefined.
  const std::optional<BaryPoint>& z_point() const { return z_point_; }
  const BaryPoint& s_point() const { return s_point_; }
  const BaryPoint& v_point() const { return v_point_; }
  const BaryPoint& o_point() const { return o_point_; }

  const Triple& x_raw() const { return x_raw_; }
  const Triple& z_raw() const { return z_raw_; }
  const Triple& s_raw() const { return s_raw_; }
  const Triple& v_raw() const { return v_raw_; }
  const Triple& o_raw() const { return o_raw_; }
  const Triple& q_raw() const { return q_raw_; }
  const Triple& q_prime_raw() const { return q_prime_raw_; }

 private:
  BaryPoint p_;
  DegeneracyFlags flags_;
  Rational e1_, e2_, e3_, anti_;
  Triple q_raw_, q_prime_raw_, o_factors_;
  Triple x_raw_, z_raw_, s_raw_, v_raw_, o_raw_;
  BaryPoint p_prime_, q_, q_prime_;
  TracePoints traces_, cotraces_;
  BaryPoint x_point_;
  std::optional<BaryPoint> z_point_;
  BaryPoint s_point_, v_point_, o_point_;
};

// Closed-form matrices.
ProjMap build_T_P(const CevianContext& ctx);
ProjMap build_T_Pprime(const CevianContext& ctx);
ProjMap build_S(const CevianContext& ctx);
ProjMap build_lambda(const CevianContext& ctx);
ProjMap build_M(const CevianContext& ctx);

// The same maps obtained by composition. Each is a nonzero multiple of the
// corresponding closed form.
ProjMap compose_S(const CevianContext& ctx);       ///< T_P T_P'
ProjMap compose_lambda(const CevianContext& ctx);  ///< T_P' T_P^-1, throws SingularMap
ProjMap compose_M(const CevianContext& ctx);       ///< T_P K^-1 T_P'

struct FixedPoints {
  BaryPoint x;  ///< center of S
  BaryPoint z;  ///< fixed by lambda
  BaryPoint s;  ///< center of M
};

/// Throws ZUndefined when P = G.
FixedPoints fixed_points(const CevianContext& ctx);

/// V from its closed form.
BaryPoint point_V(const CevianContext& ctx);
/// V as PQ . P'Q'; throws CoincidentLines when P is on a median.
BaryPoint point_V_by_meet(const CevianContext& ctx);

/// O from its closed form.
BaryPoint point_O(const CevianContext& ctx);
/// O = T_P'^-1 K (Q); throws SingularMap.
BaryPoint point_O_by_maps(const CevianContext& ctx);

/// What kind of similarity M is, read off from the parameter a.
enum class HomothetyKind { homothety, half_turn, translation, undefined };

struct HomothetyClass {
  HomothetyKind kind;
  std::optional<Rational> k;  ///< 4/(a+1); absent for translation and undefined
};

/// a = 3 gives a translation, a = -1 has no ratio, a = -5 gives k = -1.
HomothetyClass classify_homothety(const Rational& a);

/// Ratios along the lines through G, Z, S, V and through S, Q, O.
/// A field is empty when one of the points it needs is at infinity or missing.
struct RatioReport {
  Rational a;  ///< -(x+y+z)(xy+yz+zx)/(xyz) = 9 GZ/ZV
  std::optional<Rational> gz_zv;
  std::optional<Rational> gs_sv;
  std::optional<Rational> sq_so;
  std::optional<Rational> k;
  std::optional<Rational> cross_gvsz;
  HomothetyKind homothety = HomothetyKind::homothety;
};

/// Computes every ratio both from its closed form and by measuring the
/// constructed points, and throws std::logic_error if the two disagree.
RatioReport ratio_report(const CevianContext& ctx);

}  // namespace cevia
