#pragma once

// OEIS b-file ("index value" per line, '#' comments) reading, writing and
// comparison against sieved a(n).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace middiv {

struct BFileEntry {
  std::uint64_t index = 0;
  std::uint64_t value = 0;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Throws MalformedLine or NonMonotoneIndex. Accepts LF and CRLF.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> parse_bfile(std::string_view text);

struct Mismatch {
  std::uint64_t index = 0;
  std::uint64_t expected = 0;  // from the file
  std::uint64_t computed = 0;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct CrosscheckReport {
  std::uint64_t compared = 0;
  std::vector<Mismatch> mismatches;

  bool pass() const noexcept { return mismatches.empty(); }
};

/// Compares every entry with index <= limit against the sieve.
CrosscheckReport crosscheck(std::span<const BFileEntry> entries, std::uint64_t limit,
                            unsigned threads = 1);

/// Lines "n a(n)" for n = start..end.
void emit_bfile(std::ostream& out, std::uint64_t start, std::uint64_t end);
std::string emit_bfile(std::uint64_t start, std::uint64_t end);

}  // namespace middiv
