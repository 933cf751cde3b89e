#pragma once

// JSON form of certificates and reports. Every Natural is a decimal string;
// small counters (i, s, exponents, brackets) are JSON numbers.

#include <json.hpp>

#include "middiv/witness.hpp"

namespace middiv {

nlohmann::ordered_json to_json(const WitnessCertificate& cert);
nlohmann::ordered_json to_json(const VerificationReport& report);

/// Inverse of to_json(WitnessCertificate). Throws std::invalid_argument on
/// missing fields or malformed numbers.
WitnessCertificate certificate_from_json(const nlohmann::ordered_json& j);

}  // namespace middiv
