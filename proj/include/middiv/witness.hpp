#pragma once

// Explicit witnesses for the unboundedness of a(n).
//
// For i >= 1 let s_max be the real with ((i+1)/i)^s_max = 2. With
// c = ceil(s_max) the witness n = 2 * (i+1)^(2c) * i^(2c) has
// sqrt(n/2) = ((i+1)*i)^c, and d(s) = (i+1)^(c+s) * i^(c-s) for
// s = 1..floor(s_max) are middle divisors of n, so a(n) >= floor(s_max).
//
// The literal variant keeps the exponent ceil(2*s_max) on (i+1); it only
// agrees with the squared form when that ceiling is even.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "middiv/core_counting.hpp"
#include "middiv/natural.hpp"

namespace middiv {

enum class WitnessVariant { literal, squared };

std::string_view to_string(WitnessVariant v);
/// Accepts "literal" or "squared"; throws std::invalid_argument otherwise.
WitnessVariant parse_variant(std::string_view text);

/// Exact floor/ceil of s_max = ln 2 / ln(1 + 1/i), from integer powers only.
struct SmaxBrackets {
  unsigned long i = 0;
  unsigned long floor_smax = 0;
  unsigned long ceil_smax = 0;
  unsigned long ceil_2smax = 0;
  bool is_exact_integer = false;

  friend bool operator==(const SmaxBrackets&, const SmaxBrackets&) = default;
};

SmaxBrackets smax_brackets(unsigned long i);

struct WitnessDivisor {
  unsigned long s = 0;
  Natural d;

  friend bool operator==(const WitnessDivisor&, const WitnessDivisor&) = default;
};

struct WitnessCertificate {
  unsigned long i = 0;
  WitnessVariant variant = WitnessVariant::squared;
  SmaxBrackets brackets;
  Natural n;
  Factorization n_factorization;
  std::optional<Natural> sqrt_half_n;  // present iff n/2 is a perfect square
  std::vector<WitnessDivisor> divisors;  // s = 1..floor_smax

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

struct DivisorCheck {
  unsigned long s = 0;
  bool divides_n = false;
  bool in_interval = false;
  /// Remainder test and exponent comparison gave the same answer.
  bool routes_agree = true;
};

struct VerificationReport {
  WitnessCertificate certificate;
  std::vector<DivisorCheck> per_divisor;
  bool sqrt_half_is_divisor = false;
  bool factorization_matches_n = false;
  std::uint64_t verified_lower_bound = 0;
  bool overall_pass = false;
};

/// Builds the certificate. The factorization of n is assembled from those
/// of 2, i and i+1; n itself is never factored. Throws
/// std::invalid_argument for i == 0.
WitnessCertificate build_witness(unsigned long i,
                                 WitnessVariant variant = WitnessVariant::squared);

/// Checks every listed divisor; failures are recorded, never thrown.
VerificationReport verify_witness(const WitnessCertificate& cert);

/// The true a(n) of the witness, via the factored counter.
std::uint64_t exact_witness_count(const WitnessCertificate& cert);

}  // namespace middiv
