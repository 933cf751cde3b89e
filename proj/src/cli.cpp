#include "middiv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "middiv/bulk_sieve.hpp"
#include "middiv/core_counting.hpp"
#include "middiv/errors.hpp"
#include "middiv/oeis_io.hpp"
#include "middiv/witness.hpp"
#include "middiv/witness_json.hpp"

namespace middiv::cli {

namespace {

/// Thrown for bad flag values that CLI11 itself cannot see.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned long max_witness_index() {
  const char* env = std::getenv("MIDDIV_MAX_I");
  if (env == nullptr || *env == '\0') return kDefaultMaxWitnessIndex;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("MIDDIV_MAX_I is not a nonnegative integer: '") + env + "'");
  }
}

/// Output to --out PATH when given, else to `fallback`.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw Error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Options {
  std::string n_text;
  unsigned long i = 0;
  std::string variant = "squared";
  bool verify = false;
  bool exact = false;
  std::uint64_t limit = 0;
  std::uint64_t segment_size = kDefaultSegmentSize;
  bool nonzero = false;
  std::string out_path;
  unsigned threads = 1;
  std::uint32_t k = 0;
  std::string bfile_path;
  std::uint64_t start = 0;
  std::uint64_t end = 0;
};

SieveConfig sieve_config(const Options& o) {
  SieveConfig cfg;
  cfg.limit = o.limit;
  cfg.segment_size = o.segment_size;
  cfg.threads = o.threads;
  return cfg;
}

int cmd_count(const Options& o, std::ostream& out) {
  out << count_middle_divisors(parse_natural(o.n_text)) << '\n';
  return kExitOk;
}

int cmd_list(const Options& o, std::ostream& out) {
  const auto divisors = list_middle_divisors(parse_natural(o.n_text));
  out << "d\n";
  for (std::uint64_t d : divisors) out << d << '\n';
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const unsigned long cap = max_witness_index();
  if (o.i > cap) {
    throw Error("witness index " + std::to_string(o.i) + " exceeds the cap " +
                std::to_string(cap) + " (set MIDDIV_MAX_I to raise it)");
  }
  const WitnessCertificate cert = build_witness(o.i, parse_variant(o.variant));
  if (!o.verify) {
    auto j = to_json(cert);
    if (o.exact) j["exact_count"] = exact_witness_count(cert);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  const VerificationReport report = verify_witness(cert);
  auto j = to_json(report);
  if (o.exact) j["exact_count"] = exact_witness_count(cert);
  out << j.dump(2) << '\n';
  return report.overall_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_sieve(const Options& o, std::ostream& out) {
  const SieveConfig cfg = sieve_config(o);
  validate(cfg);
  OutputTarget target(o.out_path, out);
  write_counts_csv(target.stream(), cfg, o.nonzero);
  target.finish();
  return kExitOk;
}

int cmd_records(const Options& o, std::ostream& out) {
  const RecordTable table = find_records(sieve_config(o));
  OutputTarget target(o.out_path, out);
  write_records_csv(target.stream(), table);
  target.finish();
  return kExitOk;
}

int cmd_first(const Options& o, std::ostream& out) {
  const auto n = first_with_count_at_least(o.k, sieve_config(o));
  if (!n) {
    throw Error("no n <= " + std::to_string(o.limit) + " has a(n) >= " + std::to_string(o.k));
  }
  out << *n << '\n';
  return kExitOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.bfile_path, std::ios::binary);
  if (!in) throw Error("cannot open b-file '" + o.bfile_path + "'");
  const auto entries = parse_bfile(in);
  std::uint64_t limit = o.limit;
  if (limit == 0) limit = entries.empty() ? 1 : entries.back().index;
  SieveConfig probe;
  probe.limit = std::min(limit, entries.empty() ? limit : entries.back().index);
  validate(probe);
  const CrosscheckReport report = crosscheck(entries, limit, o.threads);

  nlohmann::ordered_json j;
  j["compared"] = report.compared;
  nlohmann::ordered_json mism = nlohmann::ordered_json::array();
  for (const auto& m : report.mismatches) {
    mism.push_back({{"index", m.index}, {"expected", m.expected}, {"computed", m.computed}});
  }
  j["mismatches"] = std::move(mism);
  j["pass"] = report.pass();
  out << j.dump(2) << '\n';
  if (!report.pass()) {
    err << "crosscheck: " << report.mismatches.size() << " mismatch(es)\n";
    return kExitDomainError;
  }
  return kExitOk;
}

int cmd_emit(const Options& o, std::ostream& out) {
  if (o.start == 0 || o.start > o.end) throw UsageError("emit-bfile needs 1 <= start <= end");
  SieveConfig probe;
  probe.limit = o.end;
  validate(probe);
  emit_bfile(out, o.start, o.end);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Middle divisors of n: counts, sieves, records and unboundedness witnesses",
               "middiv"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Print a(n), the number of middle divisors of n");
  count->add_option("n", o.n_text, "n >= 1, below 2^63")->required();

  auto* list = app.add_subcommand("list", "List the middle divisors of n as CSV");
  list->add_option("n", o.n_text, "n >= 1, below 2^63")->required();

  auto* witness = app.add_subcommand("witness", "Build (and optionally verify) the witness n(i)");
  witness->add_option("i", o.i, "witness index")->required()->check(CLI::PositiveNumber);
  witness->add_option("--variant", o.variant, "squared (default) or literal")
      ->check(CLI::IsMember({"squared", "literal"}));
  witness->add_flag("--verify", o.verify, "verify every divisor; exit 3 on failure");
  witness->add_flag("--exact", o.exact, "also report the exact a(n(i))");

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "sieve worker threads")->check(CLI::PositiveNumber);
  };

  auto* sieve = app.add_subcommand("sieve", "Stream a(n) for n = 1..limit as CSV");
  sieve->add_option("--limit", o.limit, "largest n")->required()->check(CLI::PositiveNumber);
  sieve->add_option("--segment-size", o.segment_size, "segment length")
      ->check(CLI::PositiveNumber);
  sieve->add_flag("--nonzero", o.nonzero, "only rows with count > 0");
  sieve->add_option("--out", o.out_path, "output file (default stdout)");
  add_threads(sieve);

  auto* records = app.add_subcommand("records", "Record table of a(n) up to limit as CSV");
  records->add_option("--limit", o.limit, "largest n")->required()->check(CLI::PositiveNumber);
  records->add_option("--out", o.out_path, "output file (default stdout)");
  add_threads(records);

  auto* first = app.add_subcommand("first", "Least n <= limit with a(n) >= k");
  first->add_option("k", o.k, "target count")->required()->check(CLI::PositiveNumber);
  first->add_option("--limit", o.limit, "largest n")->required()->check(CLI::PositiveNumber);
  add_threads(first);

  auto* cross = app.add_subcommand("crosscheck", "Compare an OEIS b-file against computed a(n)");
  cross->add_option("bfile", o.bfile_path, "b-file path")->required();
  cross->add_option("--limit", o.limit, "largest index compared (default: last in file)")
      ->check(CLI::PositiveNumber);
  add_threads(cross);

  auto* emit = app.add_subcommand("emit-bfile", "Write a(n) for start..end in b-file format");
  emit->add_option("start", o.start, "first index")->required();
  emit->add_option("end", o.end, "last index")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*list) return cmd_list(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*sieve) return cmd_sieve(o, out);
    if (*records) return cmd_records(o, out);
    if (*first) return cmd_first(o, out);
    if (*cross) return cmd_crosscheck(o, out, err);
    if (*emit) return cmd_emit(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace middiv::cli
