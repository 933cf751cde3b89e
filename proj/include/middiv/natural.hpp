#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace middiv {

/// Arbitrary-precision nonnegative integer. All arithmetic on it is exact.
using Natural = mpz_class;

/// Parses a plain decimal string (digits only, no sign, no whitespace).
/// Throws std::invalid_argument on anything else.
Natural parse_natural(std::string_view text);

std::string to_decimal(const Natural& x);

/// Largest r with r*r <= x.
Natural isqrt(const Natural& x);
std::uint64_t isqrt(std::uint64_t x);

Natural pow(const Natural& base, unsigned long exponent);

/// Value as uint64 when it fits, otherwise nullopt.
std::optional<std::uint64_t> to_u64(const Natural& x);
Natural from_u64(std::uint64_t x);

}  // namespace middiv
