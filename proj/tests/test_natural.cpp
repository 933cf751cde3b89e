#include <doctest.h>

#include <random>
#include <stdexcept>

#include "middiv/natural.hpp"

using middiv::Natural;

TEST_CASE("isqrt small values") {
  CHECK(middiv::isqrt(Natural(0)) == 0);
  CHECK(middiv::isqrt(Natural(16)) == 4);
  CHECK(middiv::isqrt(Natural(24)) == 4);
  CHECK(middiv::isqrt(std::uint64_t{0}) == 0);
  CHECK(middiv::isqrt(std::uint64_t{24}) == 4);
  CHECK(middiv::isqrt(~std::uint64_t{0}) == 0xFFFFFFFFull);
}

TEST_CASE("isqrt brackets random 256-bit values") {
  std::mt19937_64 rng(20161027);
  for (int trial = 0; trial < 10'000; ++trial) {
    Natural x = 0;
    const int limbs = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < limbs; ++k) x = (x << 64) + middiv::from_u64(rng());
    const Natural r = middiv::isqrt(x);
    REQUIRE(r * r <= x);
    REQUIRE(x < (r + 1) * (r + 1));
  }
}

TEST_CASE("isqrt on machine words near perfect squares") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10'000; ++trial) {
    const std::uint64_t root = rng() >> 32;
    for (std::uint64_t x : {root * root, root * root - 1, root * root + 1}) {
      if (root == 0 && x != 0) continue;
      const std::uint64_t r = middiv::isqrt(x);
      REQUIRE(static_cast<unsigned __int128>(r) * r <= x);
      REQUIRE(static_cast<unsigned __int128>(r + 1) * (r + 1) > x);
    }
  }
}

TEST_CASE("decimal parsing is strict") {
  CHECK(middiv::parse_natural("0") == 0);
  CHECK(middiv::to_decimal(middiv::parse_natural("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(middiv::parse_natural(""), std::invalid_argument);
  CHECK_THROWS_AS(middiv::parse_natural("-5"), std::invalid_argument);
  CHECK_THROWS_AS(middiv::parse_natural("1e9"), std::invalid_argument);
  CHECK_THROWS_AS(middiv::parse_natural(" 7"), std::invalid_argument);
}

TEST_CASE("u64 conversion") {
  CHECK(middiv::to_u64(middiv::from_u64(~std::uint64_t{0})) == ~std::uint64_t{0});
  CHECK(middiv::to_u64(Natural(0)) == 0u);
  CHECK_FALSE(middiv::to_u64(Natural(1) << 64).has_value());
}
