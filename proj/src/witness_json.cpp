#include "middiv/witness_json.hpp"

#include <stdexcept>
#include <string>

namespace middiv {

using nlohmann::ordered_json;

ordered_json to_json(const WitnessCertificate& cert) {
  ordered_json j;
  j["i"] = cert.i;
  j["variant"] = std::string(to_string(cert.variant));
  j["floor_smax"] = cert.brackets.floor_smax;
  j["ceil_smax"] = cert.brackets.ceil_smax;
  j["ceil_2smax"] = cert.brackets.ceil_2smax;
  j["smax_is_integer"] = cert.brackets.is_exact_integer;
  j["n"] = to_decimal(cert.n);

  ordered_json factors = ordered_json::array();
  for (const auto& [p, e] : cert.n_factorization.factors()) {
    factors.push_back(ordered_json::array({to_decimal(p), e}));
  }
  j["n_factorization"] = std::move(factors);
  j["sqrt_half_n"] = cert.sqrt_half_n ? ordered_json(to_decimal(*cert.sqrt_half_n))
                                      : ordered_json(nullptr);

  ordered_json divisors = ordered_json::array();
  for (const auto& [s, d] : cert.divisors) {
    divisors.push_back({{"s", s}, {"d", to_decimal(d)}});
  }
  j["divisors"] = std::move(divisors);
  return j;
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json j = to_json(report.certificate);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.per_divisor) {
    checks.push_back({{"s", c.s},
                      {"divides_n", c.divides_n},
                      {"in_interval", c.in_interval},
                      {"routes_agree", c.routes_agree}});
  }
  j["per_divisor"] = std::move(checks);
  j["sqrt_half_is_divisor"] = report.sqrt_half_is_divisor;
  j["factorization_matches_n"] = report.factorization_matches_n;
  j["verified_lower_bound"] = report.verified_lower_bound;
  j["overall_pass"] = report.overall_pass;
  return j;
}

namespace {

Natural natural_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("certificate field '") + key +
                                "' must be a decimal string");
  }
  return parse_natural(j.at(key).get<std::string>());
}

unsigned long count_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw std::invalid_argument(std::string("certificate field '") + key +
                                "' must be a nonnegative integer");
  }
  return j.at(key).get<unsigned long>();
}

}  // namespace

WitnessCertificate certificate_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  WitnessCertificate cert;
  cert.i = count_field(j, "i");
  if (!j.contains("variant") || !j.at("variant").is_string()) {
    throw std::invalid_argument("certificate field 'variant' must be a string");
  }
  cert.variant = parse_variant(j.at("variant").get<std::string>());
  cert.brackets.i = cert.i;
  cert.brackets.floor_smax = count_field(j, "floor_smax");
  cert.brackets.ceil_smax = count_field(j, "ceil_smax");
  cert.brackets.ceil_2smax = count_field(j, "ceil_2smax");
  cert.brackets.is_exact_integer = cert.brackets.floor_smax == cert.brackets.ceil_smax;
  cert.n = natural_field(j, "n");

  std::vector<PrimePower> factors;
  for (const auto& entry : j.at("n_factorization")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_number_unsigned()) {
      throw std::invalid_argument("n_factorization entries must be [\"prime\", exponent]");
    }
    factors.push_back({parse_natural(entry[0].get<std::string>()),
                       entry[1].get<unsigned long>()});
  }
  cert.n_factorization = Factorization(std::move(factors));

  if (j.contains("sqrt_half_n") && !j.at("sqrt_half_n").is_null()) {
    cert.sqrt_half_n = natural_field(j, "sqrt_half_n");
  }
  for (const auto& entry : j.at("divisors")) {
    cert.divisors.push_back({count_field(entry, "s"), natural_field(entry, "d")});
  }
  return cert;
}

}  // namespace middiv
