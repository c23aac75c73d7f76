#pragma once

// Machine-readable run reports (JSON) and a plain-text rendering.

#include "nrf/ar.hpp"
#include "nrf/cy.hpp"
#include "nrf/type_a.hpp"

#include <json.hpp>

#include <string>

namespace nrf {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const NrfReport& r, const Quiver& q);
Json to_json(const CyCertificate& c);
Json to_json(const Fraction& f);
Json to_json(const Presentation& p);
Json to_json(const TypeAReport& r, const TypeAQuiver& q);
Json cut_json(const Cut& c, const TypeAQuiver& q);

/// {schema_version, command, input, caps, result, seconds}
Json envelope(const std::string& command, const Json& input, const Json& caps, const Json& result, double seconds);

/// Indented "key: value" listing; arrays of scalars stay on one line.
std::string render_pretty(const Json& j);

}  // namespace nrf
