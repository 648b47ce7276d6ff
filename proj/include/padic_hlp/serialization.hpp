#pragma once

#include "padic_hlp/estimation.hpp"

#include <json.hpp>

namespace padic_hlp {

/// JSON shapes are part of the CLI contract (schema "padic-hlp/1").
/// Scalars serialize as strings when exact ("3/2") and as numbers
/// otherwise, so exactness survives a round trip.

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExtendedExponent& e);
ExtendedExponent exponent_from_json(const nlohmann::json& j);

/// {p, gamma_min, gamma_max, values[]}
nlohmann::json to_json(const RadialFunction& f);
RadialFunction radial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const SchurCertificate& c);
nlohmann::json to_json(const GrowthReport& g);
nlohmann::json to_json(const NormReport& r);

}  // namespace padic_hlp
