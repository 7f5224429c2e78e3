#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nmotive/motivic.hpp"
#include "nmotive/nondegeneracy.hpp"
#include "nmotive/pipeline.hpp"

namespace nmotive {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

/// A JSON number when the value fits in a long, otherwise a decimal string.
Json int_json(const Int& v);
Int int_from_json(const Json& j);
Json point_json(const LatticePoint& p);
LatticePoint point_from_json(const Json& j);
Json points_json(const std::vector<LatticePoint>& ps);

/// [{"coeff": "p/q", "exponents": [...]}, ...] in increasing exponent order.
Json poly_json(const LaurentPolynomial& f);
LaurentPolynomial poly_from_json(const Json& j, std::size_t rank);

Json atom_json(const AtomicClass& a);
AtomicClass atom_from_json(const Json& j);
Json element_json(const MotivicElement& e);
MotivicElement motivic_element_from_json(const Json& j);
Json zeta_json(const ZetaFunction& z);
ZetaFunction zeta_from_json(const Json& j);

Json face_json(const FaceData& face);
Json verdict_json(const NondegeneracyVerdict& v);
Json error_json(const ReportError& e);
/// Report fields; the caller adds the envelope (schema_version, command).
Json report_json(const AnalysisReport& r);

/// "(1-t^6) * (1-t^2)^-1 * (1-t^3)^-1": positive exponents first, each
/// group by increasing m; "1" for the empty product.
std::string zeta_text(const ZetaFunction& z);
std::string lpoly_text(const LPoly& p);
/// Torus variables named after the ambient variable when the character is
/// a coordinate vector, u1, u2, ... otherwise.
std::string atom_text(const AtomicClass& a, const std::vector<std::string>& names);
/// Terms "(1-L)^k*[...]" joined by " + " / " - ".
std::string element_text(const MotivicElement& e, const std::vector<std::string>& names);
std::string verdict_text(const NondegeneracyVerdict& v);
std::string report_text(const AnalysisReport& r, const std::vector<std::string>& names);

}  // namespace nmotive
