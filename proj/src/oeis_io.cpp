#include "middiv/oeis_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "middiv/bulk_sieve.hpp"
#include "middiv/errors.hpp"

namespace middiv {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && is_space(line[k])) ++k;
    const std::size_t start = k;
    while (k < line.size() && !is_space(line[k])) ++k;
    if (k > start) tokens.push_back(line.substr(start, k - start));
  }
  return tokens;
}

bool parse_u64(std::string_view token, std::uint64_t& out) {
  if (token.empty() || token.front() == '+' || token.front() == '-') return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    BFileEntry entry;
    if (tokens.size() != 2 || !parse_u64(tokens[0], entry.index) ||
        !parse_u64(tokens[1], entry.value) || entry.index == 0) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      throw MalformedLine(line_number, line);
    }
    if (!entries.empty() && entry.index <= entries.back().index) {
      throw NonMonotoneIndex(line_number, entry.index);
    }
    entries.push_back(entry);
  }
  return entries;
}

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bfile(in);
}

CrosscheckReport crosscheck(std::span<const BFileEntry> entries, std::uint64_t limit,
                            unsigned threads) {
  CrosscheckReport report;
  if (limit == 0) throw std::invalid_argument("crosscheck limit must be >= 1");
  if (entries.empty() || entries.front().index > limit) return report;

  SieveConfig cfg;
  cfg.limit = std::min(limit, entries.back().index);
  cfg.threads = threads;
  auto next = entries.begin();
  for_each_segment(cfg, [&](const SieveSegment& s) {
    const std::uint64_t end = s.first + s.counts.size();
    for (; next != entries.end() && next->index < end; ++next) {
      const std::uint64_t computed = s.counts[next->index - s.first];
      ++report.compared;
      if (computed != next->value) report.mismatches.push_back({next->index, next->value, computed});
    }
    return next != entries.end();
  });
  return report;
}

void emit_bfile(std::ostream& out, std::uint64_t start, std::uint64_t end) {
  if (start == 0 || start > end) {
    throw std::invalid_argument("emit_bfile needs 1 <= start <= end");
  }
  SieveConfig cfg;
  cfg.limit = end;
  for_each_segment(cfg, [&](const SieveSegment& s) {
    for (std::size_t k = 0; k < s.counts.size(); ++k) {
      const std::uint64_t n = s.first + k;
      if (n >= start) out << n << ' ' << s.counts[k] << '\n';
    }
    return static_cast<bool>(out);
  });
}

std::string emit_bfile(std::uint64_t start, std::uint64_t end) {
  std::ostringstream out;
  emit_bfile(out, start, end);
  return out.str();
}

}  // namespace middiv
