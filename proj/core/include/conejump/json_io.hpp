#ifndef CONEJUMP_JSON_IO_HPP
#define CONEJUMP_JSON_IO_HPP

#include <json.hpp>

#include "conejump/families.hpp"

namespace conejump {

using Json = nlohmann::ordered_json;

// Exact values serialize as strings ("p/q") so nothing is ever rounded.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const ExactNumber& x);
ExactNumber exact_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"gram": [[...]], "labels": [...]}
Json to_json(const GramLattice& lattice);
std::shared_ptr<const GramLattice> lattice_from_json(const Json& j, bool require_ns_signature = false);

// {"coords": [...]}
Json to_json(const DivisorClass& cls);
DivisorClass class_from_json(const Json& j, std::shared_ptr<const GramLattice> lattice);

Json to_json(const BoundaryCheck& check);
Json to_json(const ThresholdResult& result, int digits = 30);
Json to_json(const NoVectorCertificate& cert);
Json to_json(const IdealPower& power);
Json to_json(const QmReport& report);
Json to_json(const RigidityReport& report);
Json to_json(const FrobeniusIndex& index);
Json to_json(const VerifyReport& report, int digits = 30);
Json to_json(const ConePoint& t, int digits = 30);

// "p/q", "u+v*theta", "v*theta", "theta" (rational u, v).
ConePoint parse_cone_point(const std::string& text, std::shared_ptr<const ExactNumber> theta);

// User-registered family: {"name", "gram", "labels", "L", "M", "cone",
// "expected_theta"?, "r"?, "needs_cover"?, "base_chi"?}. "cone" is "rank2",
// "ee", or {"kind": "isogenous", "d": n}; the witness defaults to M.
FamilySpec family_from_json(const Json& j);
std::vector<FamilySpec> registry_from_json(const Json& j);

} // namespace conejump

#endif
