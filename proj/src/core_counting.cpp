#include "middiv/core_counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "middiv/errors.hpp"

namespace middiv {

namespace {

using u128 = unsigned __int128;

void check_budget(std::uint64_t n, const char* what) {
  if (n >= kTrialDivisionBudget) {
    throw InputTooLarge(std::string(what) + ": " + std::to_string(n) +
                        " is beyond the trial-division budget (2^63); "
                        "supply a factorization instead");
  }
}

std::uint64_t checked_u64(const Natural& n, const char* what) {
  if (sgn(n) < 0) throw std::invalid_argument(std::string(what) + ": negative input");
  auto v = to_u64(n);
  if (!v || *v >= kTrialDivisionBudget) {
    throw InputTooLarge(std::string(what) + ": " + to_decimal(n) +
                        " is beyond the trial-division budget (2^63); "
                        "supply a factorization instead");
  }
  return *v;
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": input must be >= 1");
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].exponent == 0 || factors_[k].prime < 2) {
      throw std::invalid_argument("factorization entries need prime >= 2 and exponent >= 1");
    }
    if (k > 0 && !(factors_[k - 1].prime < factors_[k].prime)) {
      throw std::invalid_argument("factorization primes must be strictly increasing");
    }
  }
}

unsigned long Factorization::exponent_of(const Natural& prime) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), prime,
      [](const PrimePower& pp, const Natural& p) { return pp.prime < p; });
  return (it != factors_.end() && it->prime == prime) ? it->exponent : 0;
}

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& [p, e] : factors_) v *= middiv::pow(p, e);
  return v;
}

Factorization operator*(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> out;
  out.reserve(a.factors_.size() + b.factors_.size());
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  while (x != a.factors_.end() || y != b.factors_.end()) {
    if (y == b.factors_.end() || (x != a.factors_.end() && x->prime < y->prime)) {
      out.push_back(*x++);
    } else if (x == a.factors_.end() || y->prime < x->prime) {
      out.push_back(*y++);
    } else {
      out.push_back({x->prime, x->exponent + y->exponent});
      ++x;
      ++y;
    }
  }
  Factorization f;
  f.factors_ = std::move(out);
  return f;
}

Factorization pow(const Factorization& f, unsigned long exponent) {
  if (exponent == 0) return {};
  std::vector<PrimePower> out = f.factors();
  for (auto& pp : out) pp.exponent *= exponent;
  return Factorization(std::move(out));
}

bool divides(const Factorization& d, const Factorization& n) {
  return std::all_of(d.factors().begin(), d.factors().end(),
                     [&](const PrimePower& pp) { return pp.exponent <= n.exponent_of(pp.prime); });
}

bool is_middle_divisor(std::uint64_t n, std::uint64_t d) {
  if (d == 0 || n % d != 0) return false;
  const u128 dd = u128{d} * d;
  return 2 * dd > n && dd <= 2 * u128{n};
}

bool is_middle_divisor(const Natural& n, const Natural& d) {
  if (sgn(d) <= 0 || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  const Natural dd = d * d;
  return 2 * dd > n && dd <= 2 * n;
}

std::uint64_t count_middle_divisors(std::uint64_t n) {
  require_positive(n, "count_middle_divisors");
  check_budget(n, "count_middle_divisors");
  std::uint64_t count = 0;
  for (std::uint64_t e = 1; u128{e} * e <= n; ++e) {
    if (n % e != 0) continue;
    const std::uint64_t co = n / e;
    count += is_middle_divisor(n, e);
    if (co != e) count += is_middle_divisor(n, co);
  }
  return count;
}

std::uint64_t count_middle_divisors(const Natural& n) {
  return count_middle_divisors(checked_u64(n, "count_middle_divisors"));
}

std::vector<std::uint64_t> list_middle_divisors(std::uint64_t n) {
  require_positive(n, "list_middle_divisors");
  check_budget(n, "list_middle_divisors");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t e = 1; u128{e} * e <= n; ++e) {
    if (n % e != 0) continue;
    const std::uint64_t co = n / e;
    if (is_middle_divisor(n, e)) small.push_back(e);
    if (co != e && is_middle_divisor(n, co)) large.push_back(co);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> list_middle_divisors(const Natural& n) {
  return list_middle_divisors(checked_u64(n, "list_middle_divisors"));
}

Factorization factorize(std::uint64_t m) {
  require_positive(m, "factorize");
  check_budget(m, "factorize");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    unsigned long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.push_back({from_u64(p), e});
  };
  strip(2);
  for (std::uint64_t p = 3; u128{p} * p <= m; p += 2) strip(p);
  if (m > 1) out.push_back({from_u64(m), 1});
  return Factorization(std::move(out));
}

Factorization factorize(const Natural& m) { return factorize(checked_u64(m, "factorize")); }

namespace {

struct FactoredCounter {
  // Primes in decreasing order; the last entry is expanded by binary search.
  std::vector<PrimePower> primes;
  std::vector<Natural> last_powers;  // p^0 .. p^e for the smallest prime
  Natural lower;                     // d must be > lower
  Natural upper;                     // d must be <= upper
  std::uint64_t count = 0;

  // Number of k in [0, e] with lower < base * p^k <= upper.
  std::uint64_t count_last(const Natural& base) const {
    auto above = [&](const Natural& bound) {
      // first k with base * p^k > bound
      auto it = std::partition_point(last_powers.begin(), last_powers.end(),
                                     [&](const Natural& pk) { return base * pk <= bound; });
      return static_cast<std::uint64_t>(it - last_powers.begin());
    };
    return above(upper) - above(lower);
  }

  void descend(std::size_t level, const Natural& partial) {
    if (level + 1 == primes.size()) {
      count += count_last(partial);
      return;
    }
    Natural d = partial;
    for (unsigned long e = 0;; ++e) {
      descend(level + 1, d);
      if (e == primes[level].exponent) break;
      d *= primes[level].prime;
      if (d > upper) break;
    }
  }
};

}  // namespace

std::uint64_t count_middle_divisors_factored(const Factorization& f) {
  const Natural n = f.value();
  if (f.empty()) return is_middle_divisor(n, Natural(1)) ? 1 : 0;

  FactoredCounter counter;
  counter.primes.assign(f.factors().rbegin(), f.factors().rend());
  counter.lower = isqrt(Natural(n / 2));
  counter.upper = isqrt(Natural(2 * n));
  const PrimePower& last = counter.primes.back();
  counter.last_powers.reserve(last.exponent + 1);
  Natural pk = 1;
  for (unsigned long k = 0; k <= last.exponent; ++k) {
    counter.last_powers.push_back(pk);
    if (k < last.exponent) pk *= last.prime;
  }
  counter.descend(0, Natural(1));
  return counter.count;
}

}  // namespace middiv
