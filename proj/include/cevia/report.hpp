#pragma once

// JSON views of points, constructions, curves and root intervals. Exact
// values always cross this boundary as canonical fraction strings.

#include <json.hpp>
#include <vector>

#include "cevia/cevian.hpp"
#include "cevia/curve.hpp"
#include "cevia/real_roots.hpp"
#include "cevia/verify.hpp"

namespace cevia {

using Json = nlohmann::ordered_json;

/// ["1", "2", "3"] in canonical form.
Json to_json(const BaryPoint& p);
Json to_json(const std::optional<Rational>& r);
Json to_json(const IsolatingInterval& iv);

std::string_view to_string(HomothetyKind kind);

/// Every named point, the ratio report and the flag names.
Json construction_report(const CevianContext& ctx);
/// The subset that exists for a point that cannot drive a context.
Json degenerate_report(const BaryPoint& p, const DegeneracyFlags& flags, const std::string& error);

/// {"a", "disc_d", "is_elliptic", "j", "torsion", "singular_points", ...}
Json curve_report(const Curve& curve, double tolerance = 1e-9);

Json intervals_report(const std::vector<IsolatingInterval>& intervals);

Json torsion_table_report(const Curve& curve);

Json verify_report(const VerifyReport& report);

}  // namespace cevia
