#pragma once

// Middle divisors: d | n with sqrt(n/2) < d <= sqrt(2n), decided in integers
// as 2*d*d > n and d*d <= 2*n. The lower end is strict, the upper inclusive.

#include <cstdint>
#include <vector>

#include "middiv/natural.hpp"

namespace middiv {

/// Inputs to the trial-division routes must be strictly below this.
inline constexpr std::uint64_t kTrialDivisionBudget = std::uint64_t{1} << 63;

struct PrimePower {
  Natural prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents positive.
/// The empty factorization represents 1.
class Factorization {
 public:
  Factorization() = default;
  /// Throws std::invalid_argument unless `factors` is canonical.
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  /// Exponent of `prime` (0 when absent).
  unsigned long exponent_of(const Natural& prime) const;

  Natural value() const;

  friend Factorization operator*(const Factorization& a, const Factorization& b);
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

Factorization pow(const Factorization& f, unsigned long exponent);

/// True when every exponent of `d` is at most the matching exponent of `n`.
bool divides(const Factorization& d, const Factorization& n);

bool is_middle_divisor(std::uint64_t n, std::uint64_t d);
bool is_middle_divisor(const Natural& n, const Natural& d);

/// a(n) by divisor-pair trial division. Throws InputTooLarge for n >= 2^63.
std::uint64_t count_middle_divisors(std::uint64_t n);
std::uint64_t count_middle_divisors(const Natural& n);

/// Middle divisors of n in increasing order. Same budget as the counter.
std::vector<std::uint64_t> list_middle_divisors(std::uint64_t n);
std::vector<std::uint64_t> list_middle_divisors(const Natural& n);

/// Deterministic trial division. Throws InputTooLarge for m >= 2^63.
Factorization factorize(std::uint64_t m);
Factorization factorize(const Natural& m);

/// a(n) for n given in factored form, any size.
///
/// Divisors are generated depth-first over the primes in decreasing order;
/// a partial product above isqrt(2n) is pruned since later factors only
/// grow it. The last (smallest) prime is not expanded: the admissible
/// exponents for it form one contiguous run, located by binary search
/// over its powers against isqrt(n div 2) < d <= isqrt(2n).
std::uint64_t count_middle_divisors_factored(const Factorization& f);

}  // namespace middiv
