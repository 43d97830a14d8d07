#include "extbinom/cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "extbinom/congruences.hpp"
#include "extbinom/emit.hpp"
#include "extbinom/errors.hpp"
#include "extbinom/exact.hpp"
#include "extbinom/modular.hpp"
#include "extbinom/primes.hpp"

namespace extbinom::cli {

namespace {

using u64 = std::uint64_t;
using Json = nlohmann::json;

constexpr const char* kGrammar =
    "weight spec grammar:\n"
    "  spec   := \"table:\" pairs | \"set:\" ints | \"odd\" | \"id\"\n"
    "          | \"avoid:a=\" int \",m=\" int | \"binom\"\n"
    "  pairs  := int \"=\" int (\",\" int \"=\" int)*\n"
    "  ints   := int (\",\" int)*\n"
    "  optional suffix \"|zero=\" ints forces those part sizes to weight 0\n";

enum class Format { Tsv, Json };

struct CliConfig {
  std::string weights;
  std::vector<std::string> corpus;
  u64 k = 0;
  u64 n = 0;
  u64 r = 0;
  u64 m = 1;
  u64 p = 2;
  u64 rows = 10;
  u64 cols = 10;
  std::optional<u64> mod;
  std::string method = "row";
  std::string theorem;
  std::vector<std::string> ranges;
  std::string format;
  u64 cap = 10'000;
  bool skip_exact = false;
};

// A usage problem detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

Format resolve_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "tsv") return Format::Tsv;
  if (text == "json") return Format::Json;
  throw UsageError("--format must be tsv or json");
}

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json")
      return true;
  }
  return false;
}

u64 parse_u64(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  u64 value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-')
    throw UsageError(context + ": '" + text + "' is not a nonnegative integer");
  return value;
}

// name=lo..hi | name=v1,v2,... | name=v
std::pair<std::string, std::vector<u64>> parse_range(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw UsageError("--range expects name=lo..hi or name=v1,v2: '" + text +
                     "'");
  std::string name = text.substr(0, eq);
  const std::string body = text.substr(eq + 1);
  std::vector<u64> values;
  if (const auto dots = body.find(".."); dots != std::string::npos) {
    const u64 lo = parse_u64(body.substr(0, dots), "--range " + name);
    const u64 hi = parse_u64(body.substr(dots + 2), "--range " + name);
    if (hi < lo) throw UsageError("--range " + name + ": empty interval");
    if (hi - lo > 1'000'000)
      throw UsageError("--range " + name + ": more than 10^6 values");
    for (u64 v = lo; v <= hi; ++v) values.push_back(v);
  } else {
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = body.find(',', start);
      const std::string item = body.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      values.push_back(parse_u64(item, "--range " + name));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return {std::move(name), std::move(values)};
}

void print_json(std::ostream& out, const Json& value) {
  out << value.dump(2) << '\n';
}

int cmd_compute(const CliConfig& cfg, std::ostream& out) {
  const WeightSpec f = parse_weights(cfg.weights);
  const Format format = resolve_format(cfg.format, Format::Tsv);
  std::string value;
  if (cfg.mod) {
    value = std::to_string(granville_mod(cfg.k, cfg.n, f, *cfg.mod,
                                         GranvilleOptions{cfg.cap})
                               .value());
  } else if (cfg.method == "row") {
    value = to_decimal(ext_binom(cfg.k, cfg.n, f));
  } else if (cfg.method == "enumerate") {
    value = to_decimal(count_by_enumeration(cfg.k, cfg.n, f));
  } else if (cfg.method == "partitions") {
    value = to_decimal(ext_binom_by_partitions(cfg.k, cfg.n, f));
  } else {
    throw UsageError("--method must be row, enumerate or partitions");
  }
  if (format == Format::Json) {
    Json doc = {{"weights", format_weights(f)},
                {"k", cfg.k},
                {"n", cfg.n},
                {"value", value}};
    if (cfg.mod) doc["modulus"] = *cfg.mod;
    print_json(out, doc);
  } else {
    out << value << '\n';
  }
  return kOk;
}

int cmd_triangle(const CliConfig& cfg, std::ostream& out) {
  const TriangleTable table =
      triangle(parse_weights(cfg.weights), cfg.rows, cfg.cols);
  if (resolve_format(cfg.format, Format::Tsv) == Format::Json)
    print_json(out, emit::triangle_json(table));
  else
    out << emit::triangle_tsv(table);
  return kOk;
}

int cmd_sequence(const CliConfig& cfg, std::ostream& out) {
  const SequenceTable table = c_sequence(parse_weights(cfg.weights), cfg.n);
  if (resolve_format(cfg.format, Format::Tsv) == Format::Json)
    print_json(out, emit::sequence_json(table));
  else
    out << emit::sequence_tsv(table);
  return kOk;
}

int cmd_bracket(const CliConfig& cfg, std::ostream& out) {
  const WeightSpec f = parse_weights(cfg.weights);
  const Natural value = bracket(cfg.k, cfg.r, cfg.m, f);
  if (resolve_format(cfg.format, Format::Tsv) == Format::Json) {
    print_json(out, {{"weights", format_weights(f)},
                     {"k", cfg.k},
                     {"r", cfg.r},
                     {"m", cfg.m},
                     {"value", to_decimal(value)}});
  } else {
    out << to_decimal(value) << '\n';
  }
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const auto theorem = theorem_from_name(cfg.theorem);
  if (!theorem) throw UsageError("unknown theorem '" + cfg.theorem + "'");
  SweepPlan plan = desk_plan(*theorem);
  if (!cfg.ranges.empty()) {
    // Explicit ranges replace the defaults for the names they mention.
    for (const auto& text : cfg.ranges) {
      auto [name, values] = parse_range(text);
      plan.ranges[name] = std::move(values);
    }
  }
  if (!cfg.corpus.empty()) {
    plan.corpus.clear();
    for (const auto& text : cfg.corpus) plan.corpus.push_back(parse_weights(text));
  }
  const SweepSummary summary = sweep(*theorem, plan.ranges, plan.corpus);
  if (resolve_format(cfg.format, Format::Json) == Format::Json) {
    print_json(out, emit::summary_json(summary));
  } else {
    out << "theorem\t" << theorem_name(summary.theorem) << "\n"
        << "total\t" << summary.total_cases << "\n"
        << "skipped\t" << summary.skipped << "\n"
        << "failures\t" << summary.failures.size() << "\n";
    for (const auto& report : summary.failures)
      out << emit::report_json(report).dump() << "\n";
  }
  return summary.failures.empty() ? kOk : kVerificationFailed;
}

int cmd_prime(const CliConfig& cfg, std::ostream& out) {
  const PrimalityVerdict verdict =
      mann_shanks_is_prime(cfg.n, parse_weights(cfg.weights));
  if (resolve_format(cfg.format, Format::Json) == Format::Json) {
    print_json(out, emit::verdict_json(verdict));
  } else {
    out << cfg.n << (verdict.is_prime ? "\tprime" : "\tcomposite");
    if (verdict.witness)
      out << "\twitness=" << *verdict.witness
          << "\tvalue=" << to_decimal(*verdict.witness_value);
    out << '\n';
  }
  return kOk;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const WeightSpec f = parse_weights(cfg.weights);

  const auto t0 = Clock::now();
  GranvilleStats stats;
  const Residue fast =
      granville_mod(cfg.k, cfg.n, f, cfg.p, GranvilleOptions{cfg.cap}, &stats);
  const double fast_s = std::chrono::duration<double>(Clock::now() - t0).count();

  std::optional<u64> exact_residue;
  double exact_s = 0;
  if (!cfg.skip_exact) {
    const auto t1 = Clock::now();
    exact_residue = reduce(ext_binom(cfg.k, cfg.n, f), cfg.p);
    exact_s = std::chrono::duration<double>(Clock::now() - t1).count();
  }
  const bool match = !exact_residue || *exact_residue == fast.value();

  if (resolve_format(cfg.format, Format::Tsv) == Format::Json) {
    Json doc = {{"weights", format_weights(f)},
                {"k", cfg.k},
                {"n", cfg.n},
                {"p", cfg.p},
                {"granville", {{"residue", fast.value()},
                               {"seconds", fast_s},
                               {"depth", stats.max_depth},
                               {"memo", stats.memo_entries}}},
                {"match", match}};
    if (exact_residue)
      doc["exact"] = {{"residue", *exact_residue}, {"seconds", exact_s}};
    else
      doc["exact"] = nullptr;
    print_json(out, doc);
  } else {
    out << "method\tresidue\tseconds\n";
    out << "granville\t" << fast.value() << "\t" << fast_s << "\n";
    if (exact_residue)
      out << "exact\t" << *exact_residue << "\t" << exact_s << "\n";
    else
      out << "exact\tskipped\t-\n";
  }
  return match ? kOk : kVerificationFailed;
}

void add_weights(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--weights", cfg.weights, "weight spec (see grammar)")
      ->required();
}

void add_format(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--format", cfg.format, "tsv or json");
}

void report_error(std::ostream& out, std::ostream& err, bool json,
                  const std::string& kind, const std::string& message) {
  if (json) {
    print_json(out, {{"error", message}, {"kind", kind}});
  } else {
    err << "error: " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  const bool json = wants_json(args);
  CliConfig cfg;
  CLI::App app{"Extended binomial coefficients: exact values, residues, "
               "congruence sweeps and a prime criterion"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "one coefficient <k, n>_f");
  add_weights(compute, cfg);
  compute->add_option("--k", cfg.k)->required();
  compute->add_option("--n", cfg.n)->required();
  compute->add_option("--mod", cfg.mod, "prime p: residue via digit recursion");
  compute->add_option("--method", cfg.method, "row, enumerate or partitions");
  compute->add_option("--cap", cfg.cap, "column cap for unbounded support");
  add_format(compute, cfg);

  auto* tri = app.add_subcommand("triangle", "rows 0..rows, columns 0..cols");
  add_weights(tri, cfg);
  tri->add_option("--rows", cfg.rows);
  tri->add_option("--cols", cfg.cols);
  add_format(tri, cfg);

  auto* seq = app.add_subcommand("sequence", "c_f(0..n)");
  add_weights(seq, cfg);
  seq->add_option("--n", cfg.n)->required();
  add_format(seq, cfg);

  auto* brk = app.add_subcommand("bracket", "sum of <k, n>_f over n = r mod m");
  add_weights(brk, cfg);
  brk->add_option("--k", cfg.k)->required();
  brk->add_option("--r", cfg.r)->required();
  brk->add_option("--m", cfg.m)->required();
  add_format(brk, cfg);

  auto* ver = app.add_subcommand("verify", "sweep one congruence theorem");
  ver->add_option("--theorem", cfg.theorem)->required();
  ver->add_option("--range", cfg.ranges, "name=lo..hi or name=v1,v2,...");
  ver->add_option("--weights", cfg.corpus, "weight spec; repeat for a corpus");
  add_format(ver, cfg);

  auto* prime = app.add_subcommand("prime", "prime criterion for n");
  add_weights(prime, cfg);
  prime->add_option("--n", cfg.n)->required();
  add_format(prime, cfg);

  auto* bench = app.add_subcommand("bench", "digit recursion vs exact");
  add_weights(bench, cfg);
  bench->add_option("--k", cfg.k)->required();
  bench->add_option("--n", cfg.n)->required();
  bench->add_option("--p", cfg.p)->required();
  bench->add_option("--cap", cfg.cap, "column cap for unbounded support");
  bench->add_flag("--skip-exact", cfg.skip_exact, "do not run the exact path");
  add_format(bench, cfg);

  std::vector<char*> argv;
  std::vector<std::string> owned(args);
  for (auto& a : owned) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(out, err, json, "usage", e.what());
    if (!json) err << app.help();
    return kUsageError;
  }

  try {
    if (*compute) return cmd_compute(cfg, out);
    if (*tri) return cmd_triangle(cfg, out);
    if (*seq) return cmd_sequence(cfg, out);
    if (*brk) return cmd_bracket(cfg, out);
    if (*ver) return cmd_verify(cfg, out);
    if (*prime) return cmd_prime(cfg, out);
    if (*bench) return cmd_bench(cfg, out);
  } catch (const ParseError& e) {
    report_error(out, err, json, "parse", e.what());
    if (!json) err << kGrammar;
    return kUsageError;
  } catch (const UsageError& e) {
    report_error(out, err, json, "usage", e.what());
    return kUsageError;
  } catch (const HypothesisViolation& e) {
    report_error(out, err, json, "hypothesis", e.what());
    return kUsageError;
  } catch (const Error& e) {
    report_error(out, err, json, "error", e.what());
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace extbinom::cli
