#include "middiv/natural.hpp"

#include <cmath>
#include <stdexcept>

namespace middiv {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative decimal integer: '" +
                                  std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

std::string to_decimal(const Natural& x) { return x.get_str(10); }

Natural isqrt(const Natural& x) {
  if (sgn(x) < 0) throw std::domain_error("isqrt of a negative value");
  Natural r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  // long double may be only 53 bits wide on some targets; fix up either way.
  while (r > 0 && static_cast<unsigned __int128>(r) * r > x) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

Natural pow(const Natural& base, unsigned long exponent) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::optional<std::uint64_t> to_u64(const Natural& x) {
  if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, x.get_mpz_t());
  return v;
}

Natural from_u64(std::uint64_t x) {
  Natural r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
  return r;
}

}  // namespace middiv
