#pragma once

// a(n) for every n <= limit in linear time.
//
// A fixed d is a middle divisor of exactly the multiples of d in the window
// [ceil(d^2/2), 2d^2 - 1], so each d in 1..isqrt(2*limit) bumps ~1.5d
// counters. The range [1, limit] is processed in segments; each segment
// only visits the d whose window reaches it.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace middiv {

inline constexpr std::uint64_t kSieveLimitCap = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 18;

struct SieveConfig {
  std::uint64_t limit = 1;
  std::uint64_t segment_size = kDefaultSegmentSize;
  /// Worker threads; output is identical for every value.
  unsigned threads = 1;
};

/// counts[k] holds a(first + k).
struct SieveSegment {
  std::uint64_t first = 1;
  std::span<const std::uint32_t> counts;
};

/// Return false to stop the sieve early.
using SegmentVisitor = std::function<bool(const SieveSegment&)>;

/// Window of n for which d is a middle divisor (when d | n).
struct DivisorWindow {
  std::uint64_t low;   // ceil(d^2 / 2)
  std::uint64_t high;  // 2 d^2 - 1
};
DivisorWindow middle_window(std::uint64_t d);

/// Fills counts with a(first), a(first+1), ... for one segment.
void fill_segment(std::uint64_t first, std::span<std::uint32_t> counts);

/// Throws LimitExceedsCap when limit > 2^40; std::invalid_argument when
/// limit, segment_size or threads is zero.
void validate(const SieveConfig& cfg);

/// Visits segments in increasing n.
void for_each_segment(const SieveConfig& cfg, const SegmentVisitor& visit);

/// a(1..limit); element k is a(k + 1).
std::vector<std::uint32_t> sieve_counts(const SieveConfig& cfg);

struct RecordEntry {
  std::uint64_t n = 0;
  std::uint32_t count = 0;

  friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

/// Least n attaining each new maximum of a(n).
struct RecordTable {
  std::vector<RecordEntry> entries;
};

RecordTable find_records(const SieveConfig& cfg);

/// Least n <= limit with a(n) >= k.
std::optional<std::uint64_t> first_with_count_at_least(std::uint32_t k,
                                                       const SieveConfig& cfg);

/// CSV "n,count", one row per n (only count > 0 rows when nonzero is set).
void write_counts_csv(std::ostream& out, const SieveConfig& cfg, bool nonzero);
void write_records_csv(std::ostream& out, const RecordTable& table);

}  // namespace middiv
