#include "middiv/witness.hpp"

#include <stdexcept>
#include <string>

namespace middiv {

std::string_view to_string(WitnessVariant v) {
  return v == WitnessVariant::literal ? "literal" : "squared";
}

WitnessVariant parse_variant(std::string_view text) {
  if (text == "literal") return WitnessVariant::literal;
  if (text == "squared") return WitnessVariant::squared;
  throw std::invalid_argument("unknown witness variant '" + std::string(text) +
                              "' (expected literal or squared)");
}

SmaxBrackets smax_brackets(unsigned long i) {
  if (i == 0) throw std::invalid_argument("smax_brackets: i must be >= 1");
  SmaxBrackets b;
  b.i = i;

  // up = (i+1)^s, down = i^s. s = 1 always qualifies since i+1 <= 2i.
  const Natural base_up = from_u64(i) + 1;
  const Natural base_down = from_u64(i);
  Natural up = base_up;
  Natural down = base_down;
  unsigned long s = 1;
  while (up * base_up <= 2 * down * base_down) {
    up *= base_up;
    down *= base_down;
    ++s;
  }
  b.floor_smax = s;
  b.is_exact_integer = (up == 2 * down);
  b.ceil_smax = b.is_exact_integer ? s : s + 1;

  // Least t with (i+1)^t >= 4 * i^t; equality means 2*s_max == t exactly.
  up = base_up;
  down = base_down;
  unsigned long t = 1;
  while (up < 4 * down) {
    up *= base_up;
    down *= base_down;
    ++t;
  }
  b.ceil_2smax = t;
  return b;
}

WitnessCertificate build_witness(unsigned long i, WitnessVariant variant) {
  WitnessCertificate cert;
  cert.i = i;
  cert.variant = variant;
  cert.brackets = smax_brackets(i);

  const unsigned long c = cert.brackets.ceil_smax;
  const unsigned long up_exp =
      variant == WitnessVariant::squared ? 2 * c : cert.brackets.ceil_2smax;
  const unsigned long down_exp = 2 * c;

  const Factorization f_up = factorize(std::uint64_t{i} + 1);
  const Factorization f_down = factorize(std::uint64_t{i});
  cert.n_factorization = factorize(2) * pow(f_up, up_exp) * pow(f_down, down_exp);

  const Natural base_up = from_u64(i) + 1;
  const Natural base_down = from_u64(i);
  cert.n = 2 * pow(base_up, up_exp) * pow(base_down, down_exp);

  const Natural half = cert.n / 2;
  if (mpz_perfect_square_p(half.get_mpz_t()) != 0) cert.sqrt_half_n = isqrt(half);

  for (unsigned long s = 1; s <= cert.brackets.floor_smax; ++s) {
    cert.divisors.push_back({s, pow(base_up, c + s) * pow(base_down, c - s)});
  }
  return cert;
}

VerificationReport verify_witness(const WitnessCertificate& cert) {
  VerificationReport report;
  report.certificate = cert;
  report.factorization_matches_n = (cert.n_factorization.value() == cert.n);

  const unsigned long c = cert.brackets.ceil_smax;
  const Factorization f_up = factorize(std::uint64_t{cert.i} + 1);
  const Factorization f_down = factorize(std::uint64_t{cert.i});

  bool all_pass = true;
  for (const auto& [s, d] : cert.divisors) {
    DivisorCheck check;
    check.s = s;
    const bool by_remainder =
        sgn(d) > 0 && mpz_divisible_p(cert.n.get_mpz_t(), d.get_mpz_t()) != 0;
    // d(s) = (i+1)^(c+s) * i^(c-s); a negative exponent on i is not a divisor.
    bool by_exponents = false;
    if (s <= c) {
      const Factorization fd = pow(f_up, c + s) * pow(f_down, c - s);
      by_exponents = fd.value() == d && divides(fd, cert.n_factorization);
    }
    check.routes_agree = (by_remainder == by_exponents);
    check.divides_n = by_remainder && by_exponents;
    check.in_interval = is_middle_divisor(cert.n, d);
    if (check.divides_n && check.in_interval) {
      ++report.verified_lower_bound;
    } else {
      all_pass = false;
    }
    report.per_divisor.push_back(check);
  }

  report.sqrt_half_is_divisor =
      cert.sqrt_half_n.has_value() && sgn(*cert.sqrt_half_n) > 0 &&
      mpz_divisible_p(cert.n.get_mpz_t(), cert.sqrt_half_n->get_mpz_t()) != 0;
  report.overall_pass = all_pass && report.factorization_matches_n &&
                        report.verified_lower_bound >= cert.brackets.floor_smax;
  return report;
}

std::uint64_t exact_witness_count(const WitnessCertificate& cert) {
  return count_middle_divisors_factored(cert.n_factorization);
}

}  // namespace middiv
