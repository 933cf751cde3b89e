#include <doctest.h>

#include <random>
#include <stdexcept>

#include "middiv/core_counting.hpp"
#include "middiv/errors.hpp"
#include "oracles.hpp"

using middiv::Factorization;
using middiv::Natural;

TEST_CASE("predicate boundaries") {
  CHECK_FALSE(middiv::is_middle_divisor(8, 2));  // 2d^2 == n is excluded
  CHECK(middiv::is_middle_divisor(8, 4));        // d^2 == 2n is included
  CHECK(middiv::is_middle_divisor(6, 3));
  CHECK_FALSE(middiv::is_middle_divisor(6, 4));  // not a divisor
  CHECK_FALSE(middiv::is_middle_divisor(Natural(8), Natural(2)));
  CHECK(middiv::is_middle_divisor(Natural(8), Natural(4)));
}

TEST_CASE("predicate agrees with exact fractions on [1,200]^2") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t d = 1; d <= 200; ++d) {
      const bool expected = n % d == 0 && oracle::in_middle_interval(n, d);
      REQUIRE(middiv::is_middle_divisor(n, d) == expected);
      REQUIRE(middiv::is_middle_divisor(Natural(static_cast<unsigned long>(n)),
                                        Natural(static_cast<unsigned long>(d))) == expected);
    }
  }
}

TEST_CASE("predicate does not overflow near the budget") {
  const std::uint64_t n = (std::uint64_t{1} << 62) * 2 - 2;  // 2^63 - 2
  const std::uint64_t d = n / 2;                              // 2^62 - 1
  CHECK_FALSE(middiv::is_middle_divisor(n, d));  // d^2 far above 2n
  CHECK(middiv::is_middle_divisor(std::uint64_t{1} << 61, std::uint64_t{1} << 31));
}

TEST_CASE("count examples") {
  CHECK(middiv::count_middle_divisors(1) == 1);
  CHECK(middiv::count_middle_divisors(6) == 2);
  CHECK(middiv::count_middle_divisors(2592) == 3);
  CHECK(middiv::list_middle_divisors(2592) == std::vector<std::uint64_t>{48, 54, 72});
  CHECK(middiv::list_middle_divisors(8) == std::vector<std::uint64_t>{4});
  CHECK(middiv::list_middle_divisors(3).empty());
  CHECK(middiv::list_middle_divisors(6) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("trial-division budget") {
  const std::uint64_t too_big = std::uint64_t{1} << 63;
  CHECK_THROWS_AS(middiv::count_middle_divisors(too_big), middiv::InputTooLarge);
  CHECK_THROWS_AS(middiv::list_middle_divisors(too_big), middiv::InputTooLarge);
  CHECK_THROWS_AS(middiv::factorize(too_big), middiv::InputTooLarge);
  CHECK_THROWS_AS(middiv::count_middle_divisors(Natural(1) << 100), middiv::InputTooLarge);
  CHECK_THROWS_AS(middiv::count_middle_divisors(0), std::invalid_argument);
  CHECK_THROWS_AS(middiv::factorize(0), std::invalid_argument);
}

TEST_CASE("largest budget input is accepted") {
  // 2^63 - 1 = 7^2 * 73 * 127 * 337 * 92737 * 649657
  const std::uint64_t n = (std::uint64_t{1} << 63) - 1;
  const auto f = middiv::factorize(n);
  CHECK(f.value() == middiv::from_u64(n));
  CHECK(f.factors().size() == 6);
  CHECK(f.exponent_of(Natural(7)) == 2);
}

TEST_CASE("factorize examples") {
  using PP = middiv::PrimePower;
  CHECK(middiv::factorize(12).factors() == std::vector<PP>{{Natural(2), 2}, {Natural(3), 1}});
  CHECK(middiv::factorize(1).empty());
  CHECK(middiv::factorize(110).factors() ==
        std::vector<PP>{{Natural(2), 1}, {Natural(5), 1}, {Natural(11), 1}});
  CHECK(middiv::factorize(Natural(97)).factors() == std::vector<PP>{{Natural(97), 1}});
}

TEST_CASE("factorization invariants") {
  CHECK_THROWS_AS(Factorization({{Natural(3), 1}, {Natural(2), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization({{Natural(2), 0}}), std::invalid_argument);
  const auto product = middiv::factorize(12) * middiv::factorize(45);
  CHECK(product == middiv::factorize(540));
  CHECK(middiv::pow(middiv::factorize(6), 3) == middiv::factorize(216));
  CHECK(middiv::divides(middiv::factorize(18), middiv::factorize(540)));
  CHECK_FALSE(middiv::divides(middiv::factorize(8), middiv::factorize(540)));
}

TEST_CASE("factorize reconstructs and yields primes") {
  for (std::uint64_t m = 1; m <= 5000; ++m) {
    const auto f = middiv::factorize(m);
    REQUIRE(f.value() == Natural(static_cast<unsigned long>(m)));
    for (const auto& [p, e] : f.factors()) {
      REQUIRE(mpz_probab_prime_p(p.get_mpz_t(), 30) == 2);
    }
  }
}

TEST_CASE("pair enumeration equals the naive filter for n <= 2000") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto expected = oracle::middle_divisors(n);
    REQUIRE(middiv::list_middle_divisors(n) == expected);
    REQUIRE(middiv::count_middle_divisors(n) == expected.size());
  }
}

TEST_CASE("three counters agree on [1, 10^4]") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto c = middiv::count_middle_divisors(n);
    REQUIRE(middiv::list_middle_divisors(n).size() == c);
    REQUIRE(middiv::count_middle_divisors_factored(middiv::factorize(n)) == c);
  }
}

TEST_CASE("boundary law on [1, 10^4]") {
  for (std::uint64_t d = 1; 2 * d * d <= 10'000; ++d) {
    // n = 2d^2: d^2 < 2n, 2d^2 == n -> excluded
    REQUIRE_FALSE(middiv::is_middle_divisor(2 * d * d, d));
    // n = d^2/2 when d is even: d^2 == 2n -> included
    if (d % 2 == 0) REQUIRE(middiv::is_middle_divisor(d * d / 2, d));
  }
}

TEST_CASE("factored counter examples") {
  CHECK(middiv::count_middle_divisors_factored(middiv::factorize(2592)) == 3);
  CHECK(middiv::count_middle_divisors_factored(Factorization{}) == 1);

  // n(3), squared form: 2 * 4^6 * 3^6 = 2^13 * 3^6 = 5,971,968.
  const Factorization f({{Natural(2), 13}, {Natural(3), 6}});
  CHECK(f.value() == 5'971'968);
  const auto divs = oracle::all_divisors({{2, 13}, {3, 6}});
  const auto expected = oracle::middle_count_from_divisors(f.value(), divs);
  CHECK(expected == 7);
  CHECK(middiv::count_middle_divisors_factored(f) == 7);
  CHECK(middiv::count_middle_divisors(5'971'968) == 7);
}

TEST_CASE("factored counter matches full enumeration on random big factorizations") {
  std::mt19937_64 rng(42);
  const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<unsigned long, unsigned long>> raw;
    std::vector<middiv::PrimePower> pp;
    for (unsigned long p : primes) {
      const unsigned long e = rng() % 5;
      if (e == 0) continue;
      raw.push_back({p, e});
      pp.push_back({Natural(p), e});
    }
    const Factorization f(pp);
    const auto divs = oracle::all_divisors(raw);
    REQUIRE(middiv::count_middle_divisors_factored(f) ==
            oracle::middle_count_from_divisors(f.value(), divs));
  }
}
