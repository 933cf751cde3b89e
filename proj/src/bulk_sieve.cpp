#include "middiv/bulk_sieve.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "middiv/errors.hpp"
#include "middiv/natural.hpp"

namespace middiv {

DivisorWindow middle_window(std::uint64_t d) {
  const std::uint64_t dd = d * d;
  return {(dd + 1) / 2, 2 * dd - 1};
}

void fill_segment(std::uint64_t first, std::span<std::uint32_t> counts) {
  std::fill(counts.begin(), counts.end(), 0u);
  if (counts.empty()) return;
  const std::uint64_t last = first + counts.size() - 1;

  // 2d^2 - 1 >= first needs d >= sqrt(first / 2); d^2 / 2 <= last needs d <= sqrt(2 last).
  const std::uint64_t d_lo = std::max<std::uint64_t>(1, isqrt(first / 2));
  const std::uint64_t d_hi = isqrt(2 * last);
  std::uint32_t* const base = counts.data();
  for (std::uint64_t d = d_lo; d <= d_hi; ++d) {
    const DivisorWindow w = middle_window(d);
    const std::uint64_t lo = std::max(w.low, first);
    const std::uint64_t hi = std::min(w.high, last);
    if (lo > hi) continue;
    const std::uint64_t start = (lo + d - 1) / d * d;
    for (std::uint64_t m = start; m <= hi; m += d) ++base[m - first];
  }
}

void validate(const SieveConfig& cfg) {
  if (cfg.limit == 0) throw std::invalid_argument("sieve limit must be >= 1");
  if (cfg.limit > kSieveLimitCap) {
    throw LimitExceedsCap("sieve limit " + std::to_string(cfg.limit) +
                          " exceeds the cap 2^40");
  }
  if (cfg.segment_size == 0) throw std::invalid_argument("segment size must be >= 1");
  if (cfg.threads == 0) throw std::invalid_argument("thread count must be >= 1");
}

void for_each_segment(const SieveConfig& cfg, const SegmentVisitor& visit) {
  validate(cfg);
  const std::uint64_t seg = std::min(cfg.segment_size, cfg.limit);
  const std::uint64_t segment_count = (cfg.limit + seg - 1) / seg;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads, segment_count));

  std::vector<std::vector<std::uint32_t>> buffers(workers);
  auto segment_span = [&](std::uint64_t index, std::vector<std::uint32_t>& buf) {
    const std::uint64_t first = 1 + index * seg;
    const std::uint64_t len = std::min(seg, cfg.limit - first + 1);
    buf.resize(len);
    return first;
  };

  for (std::uint64_t batch = 0; batch < segment_count; batch += workers) {
    const unsigned in_batch =
        static_cast<unsigned>(std::min<std::uint64_t>(workers, segment_count - batch));
    std::vector<std::uint64_t> firsts(in_batch);
    if (in_batch == 1) {
      firsts[0] = segment_span(batch, buffers[0]);
      fill_segment(firsts[0], buffers[0]);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(in_batch);
      for (unsigned w = 0; w < in_batch; ++w) {
        firsts[w] = segment_span(batch + w, buffers[w]);
        pool.emplace_back([&, w] { fill_segment(firsts[w], buffers[w]); });
      }
    }
    for (unsigned w = 0; w < in_batch; ++w) {
      if (!visit(SieveSegment{firsts[w], buffers[w]})) return;
    }
  }
}

std::vector<std::uint32_t> sieve_counts(const SieveConfig& cfg) {
  validate(cfg);
  std::vector<std::uint32_t> all;
  all.reserve(cfg.limit);
  for_each_segment(cfg, [&](const SieveSegment& s) {
    all.insert(all.end(), s.counts.begin(), s.counts.end());
    return true;
  });
  return all;
}

RecordTable find_records(const SieveConfig& cfg) {
  RecordTable table;
  std::uint32_t best = 0;
  for_each_segment(cfg, [&](const SieveSegment& s) {
    for (std::size_t k = 0; k < s.counts.size(); ++k) {
      if (s.counts[k] > best) {
        best = s.counts[k];
        table.entries.push_back({s.first + k, best});
      }
    }
    return true;
  });
  return table;
}

std::optional<std::uint64_t> first_with_count_at_least(std::uint32_t k,
                                                       const SieveConfig& cfg) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::optional<std::uint64_t> found;
  for_each_segment(cfg, [&](const SieveSegment& s) {
    auto it = std::find_if(s.counts.begin(), s.counts.end(),
                           [k](std::uint32_t c) { return c >= k; });
    if (it == s.counts.end()) return true;
    found = s.first + static_cast<std::uint64_t>(it - s.counts.begin());
    return false;
  });
  return found;
}

void write_counts_csv(std::ostream& out, const SieveConfig& cfg, bool nonzero) {
  out << "n,count\n";
  std::string buf;
  for_each_segment(cfg, [&](const SieveSegment& s) {
    buf.clear();
    char row[24];
    for (std::size_t k = 0; k < s.counts.size(); ++k) {
      if (nonzero && s.counts[k] == 0) continue;
      buf.append(row, std::to_chars(row, row + sizeof row, s.first + k).ptr);
      buf.push_back(',');
      buf.append(row, std::to_chars(row, row + sizeof row, s.counts[k]).ptr);
      buf.push_back('\n');
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    return static_cast<bool>(out);
  });
}

void write_records_csv(std::ostream& out, const RecordTable& table) {
  out << "n,count\n";
  for (const auto& [n, count] : table.entries) out << n << ',' << count << '\n';
}

}  // namespace middiv
