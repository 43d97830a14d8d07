#include "extbinom/congruences.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <exception>
#include <numeric>
#include <unordered_map>

#include "extbinom/errors.hpp"
#include "extbinom/exact.hpp"
#include "extbinom/kernels.hpp"
#include "extbinom/primes.hpp"

namespace extbinom {

namespace {

using u64 = std::uint64_t;

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr std::array<TheoremName, 20> kTheorems{{
    {TheoremId::Parity, "parity"},
    {TheoremId::PrimeRow, "prime_row"},
    {TheoremId::ShiftRow, "shift_row"},
    {TheoremId::PPlus1Row, "p_plus_1_row"},
    {TheoremId::PrimePowerRow, "prime_power_row"},
    {TheoremId::Babbage, "babbage"},
    {TheoremId::BabbageSingle, "babbage_single"},
    {TheoremId::SpRowModP2, "sp_row_mod_p2"},
    {TheoremId::SpRowSmall, "sp_row_small"},
    {TheoremId::CrossSymmetry, "cross_symmetry"},
    {TheoremId::Divisibility, "divisibility"},
    {TheoremId::Ms, "ms"},
    {TheoremId::Lucas, "lucas"},
    {TheoremId::Granville, "granville"},
    {TheoremId::Somer, "somer"},
    {TheoremId::AvoidRecurrence, "avoid_recurrence"},
    {TheoremId::Glaisher, "glaisher"},
    {TheoremId::RowsumParity, "rowsum_parity"},
    {TheoremId::FibPrimeResidue, "fib_prime_residue"},
    {TheoremId::FibGcd, "fib_gcd"},
}};

constexpr std::array<TheoremId, 20> kAllTheorems = [] {
  std::array<TheoremId, 20> out{};
  for (std::size_t i = 0; i < kTheorems.size(); ++i) out[i] = kTheorems[i].id;
  return out;
}();

// Exact rows of <k, .>_f, memoized per thread across verify calls.
class RowCache {
 public:
  const Natural& coeff(const std::string& key, const WeightSpec& f, u64 k,
                       u64 n) {
    auto& row = rows_[key][k];
    if (n >= row.size()) {
      if (++stored_ > kMaxRows) {
        rows_.clear();
        stored_ = 0;
        return coeff(key, f, k, n);
      }
      const u64 width = std::max<u64>(64, std::bit_ceil(n + 1));
      row = ext_binom_row(k, f, width - 1);
    }
    return row[n];
  }

 private:
  static constexpr u64 kMaxRows = 4096;
  std::unordered_map<std::string, std::unordered_map<u64, std::vector<Natural>>>
      rows_;
  u64 stored_ = 0;
};

RowCache& row_cache() {
  thread_local RowCache cache;
  return cache;
}

// Everything one verify call needs about f.
class Instance {
 public:
  Instance(TheoremId theorem, const Params& params, const WeightSpec& f)
      : theorem_(theorem),
        params_(params),
        f_(f),
        key_(format_weights(f)),
        bound_(support_bound(f)) {}

  u64 get(const char* name) const {
    auto it = params_.find(name);
    if (it == params_.end())
      throw InvalidArgument(std::string(theorem_name(theorem_)) +
                            ": missing parameter '" + name + "'");
    return it->second;
  }

  void require(bool condition, const std::string& what) const {
    if (!condition)
      throw HypothesisViolation(std::string(theorem_name(theorem_)) + ": " +
                                what);
  }

  void require_prime(u64 p) const {
    require(trial_division_is_prime(p), "p = " + std::to_string(p) +
                                            " is not prime");
  }

  void require_finite() const {
    require(bound_.has_value(), "f must be zero almost everywhere");
  }

  // <k, n>_f
  Natural c(u64 k, u64 n) const {
    if (bound_ && static_cast<unsigned __int128>(k) * *bound_ < n)
      return Natural(0);
    return row_cache().coeff(key_, f_, k, n);
  }

  Natural w(u64 s) const { return to_natural(f_(s)); }

  Natural wpow(u64 s, u64 e) const { return pow_natural(w(s), e); }

  const WeightSpec& f() const noexcept { return f_; }
  const SupportBound& bound() const noexcept { return bound_; }

  CongruenceReport report(Natural lhs, Natural rhs, u64 modulus) const {
    CongruenceReport out{theorem_, params_, key_, std::move(lhs),
                         std::move(rhs), modulus, false};
    if (modulus == 0) {
      out.holds = out.lhs == out.rhs;
    } else {
      Natural diff = out.lhs - out.rhs;
      out.holds = mpz_divisible_ui_p(diff.get_mpz_t(), modulus) != 0;
    }
    return out;
  }

 private:
  TheoremId theorem_;
  const Params& params_;
  const WeightSpec& f_;
  std::string key_;
  SupportBound bound_;
};

u64 checked_pow(u64 base, u64 e) {
  unsigned __int128 out = 1;
  for (u64 i = 0; i < e; ++i) {
    out *= base;
    if (out > UINT64_MAX) throw InvalidArgument("power exceeds 64 bits");
  }
  return static_cast<u64>(out);
}

// <n, m>_g with g(a) = <p, a*p>_f, from exact values of g on [0, m].
Natural babbage_rhs(const Instance& in, u64 p, u64 n, u64 m) {
  std::vector<Natural> g(m + 1);
  for (u64 a = 0; a <= m; ++a) g[a] = in.c(p, a * p);
  return kernels::truncated_power(g, n, m)[m];
}

CongruenceReport parity(const Instance& in) {
  const u64 k = in.get("k");
  const u64 n = in.get("n");
  Natural rhs = 0;
  if (k % 2 == 0) {
    if (n % 2 == 0) rhs = in.c(k / 2, n / 2);
  } else {
    for (u64 s = 0; s <= n / 2; ++s)
      rhs += in.w(2 * s + n % 2) * in.c(k / 2, n / 2 - s);
  }
  return in.report(in.c(k, n), rhs, 2);
}

CongruenceReport prime_row(const Instance& in) {
  const u64 p = in.get("p");
  const u64 n = in.get("n");
  in.require_prime(p);
  return in.report(in.c(p, n), n % p == 0 ? in.w(n / p) : Natural(0), p);
}

CongruenceReport shift_row(const Instance& in) {
  const u64 k = in.get("k");
  const u64 s = in.get("s");
  const u64 p = in.get("p");
  const u64 j = in.get("j");
  in.require_prime(p);
  in.require(j < p, "needs j < p");
  return in.report(in.c(k + s * p, j), in.c(k, j) * in.wpow(0, s * p), p);
}

CongruenceReport p_plus_1_row(const Instance& in) {
  const u64 p = in.get("p");
  const u64 m = in.get("m");
  const u64 r = in.get("r");
  in.require_prime(p);
  in.require(r < p, "needs r < p");
  Natural rhs = 0;
  for (u64 s = 0; s <= m; ++s) rhs += in.w(r + s * p) * in.w(m - s);
  return in.report(in.c(p + 1, m * p + r), rhs, p);
}

CongruenceReport prime_power_row(const Instance& in) {
  const u64 p = in.get("p");
  const u64 m = in.get("m");
  const u64 n = in.get("n");
  in.require_prime(p);
  in.require(m >= 1, "needs m >= 1");
  const u64 q = checked_pow(p, m);
  return in.report(in.c(q, n), n % q == 0 ? in.w(n / q) : Natural(0), p);
}

CongruenceReport babbage(const Instance& in) {
  const u64 n = in.get("n");
  const u64 m = in.get("m");
  const u64 p = in.get("p");
  in.require_prime(p);
  return in.report(in.c(n * p, m * p), babbage_rhs(in, p, n, m), p * p);
}

CongruenceReport babbage_single(const Instance& in) {
  const u64 r = in.get("r");
  const u64 p = in.get("p");
  in.require_prime(p);
  // The factor r makes the right side vanish at r = 0.
  Natural rhs = 0;
  if (r > 0) rhs = in.c(p, p) * in.wpow(0, p * (r - 1)) * to_natural(r);
  return in.report(in.c(p * r, p), rhs, p * p);
}

CongruenceReport sp_row_mod_p2(const Instance& in) {
  const u64 s = in.get("s");
  const u64 r = in.get("r");
  const u64 p = in.get("p");
  in.require_prime(p);
  in.require(r % p != 0, "needs p not dividing r");
  Natural rhs = 0;
  if (s > 0) {
    for (u64 i1 = r % p; i1 <= r; i1 += p)
      rhs += in.c(p, i1) * babbage_rhs(in, p, s - 1, (r - i1) / p);
    rhs *= to_natural(s);
  }
  return in.report(in.c(s * p, r), rhs, p * p);
}

CongruenceReport sp_row_small(const Instance& in) {
  const u64 s = in.get("s");
  const u64 r = in.get("r");
  const u64 p = in.get("p");
  in.require_prime(p);
  in.require(r >= 1 && r <= p, "needs 1 <= r <= p");
  in.require(s >= 1, "needs s >= 1");
  return in.report(in.c(s * p, r),
                   to_natural(s) * in.c(p, r) * in.wpow(0, p * (s - 1)),
                   p * p);
}

CongruenceReport cross_symmetry(const Instance& in) {
  const u64 r = in.get("r");
  const u64 s = in.get("s");
  const u64 p = in.get("p");
  in.require_prime(p);
  in.require(r >= 1 && r <= p && s >= 1 && s <= p, "needs 1 <= r, s <= p");
  return in.report(in.wpow(0, p * (s - 1)) * to_natural(s) * in.c(r * p, r),
                   in.wpow(0, p * (r - 1)) * to_natural(r) * in.c(s * p, r),
                   p * p);
}

CongruenceReport divisibility(const Instance& in) {
  const u64 m = in.get("m");
  const u64 k = in.get("k");
  const u64 n = in.get("n");
  in.require(k >= 1, "needs k >= 1");
  return in.report(in.c(m * k, n), Natural(0), k / std::gcd(k, n));
}

CongruenceReport ms(const Instance& in) {
  const u64 p = in.get("p");
  const u64 r = in.get("r");
  in.require_prime(p);
  in.require(r >= 1, "needs r >= 1");
  return in.report(in.c(p * r, p),
                   in.wpow(0, p * (r - 1)) * in.wpow(1, p) *
                       ordinary_binomial(p * r, p),
                   p * r);
}

// Sum over (s_0..s_r) with sum s_i p^i = n of prod <k_i, s_i>_f, exactly.
Natural lucas_tuple_sum(const Instance& in, const std::vector<u64>& digits,
                        const std::vector<u64>& places, std::size_t i,
                        u64 remaining) {
  if (i == 0) return in.c(digits[0], remaining);
  Natural acc = 0;
  for (u64 s = 0; s <= remaining / places[i]; ++s) {
    Natural top = in.c(digits[i], s);
    if (sgn(top) == 0) continue;
    acc += top * lucas_tuple_sum(in, digits, places, i - 1,
                                 remaining - s * places[i]);
  }
  return acc;
}

CongruenceReport lucas(const Instance& in) {
  const u64 k = in.get("k");
  const u64 n = in.get("n");
  const u64 p = in.get("p");
  in.require_prime(p);
  std::vector<u64> digits;
  std::vector<u64> places;
  u64 rest = k;
  u64 place = 1;
  do {
    digits.push_back(rest % p);
    places.push_back(place);
    rest /= p;
    if (rest > 0) place *= p;
  } while (rest > 0);
  return in.report(in.c(k, n),
                   lucas_tuple_sum(in, digits, places, digits.size() - 1, n),
                   p);
}

CongruenceReport granville(const Instance& in) {
  const u64 k = in.get("k");
  const u64 n = in.get("n");
  const u64 p = in.get("p");
  in.require_prime(p);
  Natural rhs = 0;
  for (u64 m = 0; m <= n / p; ++m)
    rhs += in.c(k / p, n / p - m) * in.c(k % p, n % p + m * p);
  return in.report(in.c(k, n), rhs, p);
}

void require_composition_weights(const Instance& in) {
  in.require(in.f()(0) == 0, "c_f needs f(0) = 0");
}

CongruenceReport somer(const Instance& in) {
  const u64 p = in.get("p");
  const u64 b = in.get("b");
  const u64 n = in.get("n");
  in.require_prime(p);
  in.require_finite();
  require_composition_weights(in);
  const u64 order = *in.bound();
  in.require(order >= 1, "f must have a positive part size in its support");
  const u64 step = checked_pow(p, b);
  const SequenceTable c = c_sequence(in.f(), n + order * step);
  Natural rhs = 0;
  for (u64 i = 1; i <= order; ++i)
    rhs += in.w(i) * c[n + (order - i) * step];
  return in.report(c[n + order * step], rhs, p);
}

CongruenceReport avoid_recurrence(const Instance& in) {
  const u64 n = in.get("n");
  const WeightSpec& f = in.f();
  in.require(f.kind() == WeightKind::AvoidProgression,
             "f must avoid an arithmetic progression");
  const u64 a = f.progression_start();
  const u64 m = f.progression_step();
  in.require(a >= 1 && a < m, "needs 1 <= a < m");
  in.require(std::all_of(f.zeroed().begin(), f.zeroed().end(),
                         [](PartSize s) { return s == 0; }),
             "only part size 0 may be zeroed");
  require_composition_weights(in);
  in.require(n >= 1, "recurrence holds for n >= 1");
  const SequenceTable c = c_sequence(f, n + m);
  Natural rhs = 2 * c[n];
  for (u64 i = 1; i < m; ++i) {
    if (i != a) rhs += c[n + m - i];
  }
  return in.report(c[n + m], rhs, 0);
}

CongruenceReport glaisher(const Instance& in) {
  const u64 p = in.get("p");
  const u64 m = in.get("m");
  const u64 k = in.get("k");
  const u64 r = in.get("r");
  in.require_prime(p);
  in.require(m >= 1 && (p - 1) % m == 0, "needs p = 1 (mod m)");
  in.require(k >= 1, "needs k >= 1");
  in.require(r < m, "needs r < m");
  in.require_finite();
  return in.report(bracket(k + p - 1, r, m, in.f()), bracket(k, r, m, in.f()),
                   p);
}

CongruenceReport rowsum_parity(const Instance& in) {
  const u64 k = in.get("k");
  in.require(k >= 1, "needs k >= 1");
  in.require_finite();
  return in.report(bracket(k, 0, 1, in.f()), total_mass(in.f()), 2);
}

u64 fib_family_param(const Instance& in, u64 max_family) {
  const u64 family = in.get("family");
  in.require(family <= max_family,
             "family must be in [0, " + std::to_string(max_family) + "]");
  return family;
}

CongruenceReport with_weights(CongruenceReport report, const WeightSpec& f) {
  report.weights = format_weights(f);
  return report;
}

CongruenceReport fib_prime_residue(const Instance& in) {
  const u64 family = fib_family_param(in, 2);
  const u64 p = in.get("p");
  in.require_prime(p);
  // c_{1,2}(p-1), c_{N\{0,1}}(p+1), c_odd(p)
  const u64 index = family == 0 ? p - 1 : family == 1 ? p + 1 : p;
  const WeightSpec weights = fib_family(family, index);
  const SequenceTable c = c_sequence(weights, index);
  u64 expected = 0;
  if (p != 5) expected = (p % 5 == 1 || p % 5 == 4) ? 1 : p - 1;
  return with_weights(in.report(c[index], to_natural(expected), p), weights);
}

CongruenceReport fib_gcd(const Instance& in) {
  const u64 family = fib_family_param(in, 3);
  const u64 m = in.get("m");
  const u64 n = in.get("n");
  if (family != 0) in.require(m >= 1 && n >= 1, "needs m, n >= 1");
  u64 target = 0;
  switch (family) {
    case 0: target = std::gcd(m + 1, n + 1) - 1; break;
    case 1: target = std::gcd(m - 1, n - 1) + 1; break;
    default: target = std::gcd(m, n); break;
  }
  const u64 top = std::max({m, n, target});
  const WeightSpec weights = fib_family(family, top);
  const SequenceTable c = c_sequence(weights, top);
  Natural lhs;
  mpz_gcd(lhs.get_mpz_t(), c[m].get_mpz_t(), c[n].get_mpz_t());
  return with_weights(in.report(lhs, c[target], 0), weights);
}

using Verifier = CongruenceReport (*)(const Instance&);

Verifier verifier_for(TheoremId id) {
  switch (id) {
    case TheoremId::Parity: return parity;
    case TheoremId::PrimeRow: return prime_row;
    case TheoremId::ShiftRow: return shift_row;
    case TheoremId::PPlus1Row: return p_plus_1_row;
    case TheoremId::PrimePowerRow: return prime_power_row;
    case TheoremId::Babbage: return babbage;
    case TheoremId::BabbageSingle: return babbage_single;
    case TheoremId::SpRowModP2: return sp_row_mod_p2;
    case TheoremId::SpRowSmall: return sp_row_small;
    case TheoremId::CrossSymmetry: return cross_symmetry;
    case TheoremId::Divisibility: return divisibility;
    case TheoremId::Ms: return ms;
    case TheoremId::Lucas: return lucas;
    case TheoremId::Granville: return granville;
    case TheoremId::Somer: return somer;
    case TheoremId::AvoidRecurrence: return avoid_recurrence;
    case TheoremId::Glaisher: return glaisher;
    case TheoremId::RowsumParity: return rowsum_parity;
    case TheoremId::FibPrimeResidue: return fib_prime_residue;
    case TheoremId::FibGcd: return fib_gcd;
  }
  throw InvalidArgument("unknown theorem");
}

enum class Outcome : unsigned char { Held, Failed, Skipped };

struct CaseGrid {
  std::vector<std::string> names;
  std::vector<const std::vector<u64>*> values;
  u64 tuples = 1;
  u64 specs = 0;

  CaseGrid(const ParamRanges& ranges, std::size_t corpus_size)
      : specs(corpus_size) {
    for (const auto& [name, vals] : ranges) {
      names.push_back(name);
      values.push_back(&vals);
      tuples *= vals.size();
    }
  }

  u64 size() const { return tuples * specs; }

  // Case i: the last parameter name varies fastest before the spec index.
  std::pair<Params, std::size_t> decode(u64 i) const {
    const std::size_t spec = i % specs;
    u64 rest = i / specs;
    Params params;
    for (std::size_t j = names.size(); j-- > 0;) {
      const auto& vals = *values[j];
      params[names[j]] = vals[rest % vals.size()];
      rest /= vals.size();
    }
    return {params, spec};
  }
};

SweepSummary run_sweep(TheoremId theorem, const ParamRanges& ranges,
                       std::span<const WeightSpec> corpus, bool parallel) {
  SweepSummary summary{theorem, 0, 0, {}};
  if (corpus.empty()) return summary;
  const CaseGrid grid(ranges, corpus.size());
  const u64 cases = grid.size();
  std::vector<Outcome> outcomes(cases, Outcome::Skipped);
  std::vector<std::optional<CongruenceReport>> failed(cases);
  std::vector<std::exception_ptr> errors(cases);

  auto run_case = [&](u64 i) {
    try {
      auto [params, spec] = grid.decode(i);
      CongruenceReport report = verify(theorem, params, corpus[spec]);
      if (report.holds) {
        outcomes[i] = Outcome::Held;
      } else {
        outcomes[i] = Outcome::Failed;
        failed[i] = std::move(report);
      }
    } catch (const HypothesisViolation&) {
      outcomes[i] = Outcome::Skipped;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (u64 i = 0; i < cases; ++i) run_case(i);
  } else {
    for (u64 i = 0; i < cases; ++i) run_case(i);
  }

  for (u64 i = 0; i < cases; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    switch (outcomes[i]) {
      case Outcome::Held:
        ++summary.total_cases;
        break;
      case Outcome::Failed:
        ++summary.total_cases;
        summary.failures.push_back(std::move(*failed[i]));
        break;
      case Outcome::Skipped:
        ++summary.skipped;
        break;
    }
  }
  return summary;
}

std::vector<u64> span_of(u64 lo, u64 hi) {
  std::vector<u64> out(hi - lo + 1);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

}  // namespace

std::span<const TheoremId> all_theorems() { return kAllTheorems; }

std::string_view theorem_name(TheoremId id) {
  for (const auto& entry : kTheorems) {
    if (entry.id == id) return entry.name;
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (const auto& entry : kTheorems) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

CongruenceReport verify(TheoremId theorem, const Params& params,
                        const WeightSpec& f) {
  const Instance instance(theorem, params, f);
  return verifier_for(theorem)(instance);
}

SweepSummary sweep(TheoremId theorem, const ParamRanges& ranges,
                   std::span<const WeightSpec> corpus) {
  return run_sweep(theorem, ranges, corpus, true);
}

SweepSummary sweep_serial(TheoremId theorem, const ParamRanges& ranges,
                          std::span<const WeightSpec> corpus) {
  return run_sweep(theorem, ranges, corpus, false);
}

Natural fib(std::uint64_t n) {
  Natural out;
  mpz_fib_ui(out.get_mpz_t(), n);
  return out;
}

WeightSpec fib_family(std::uint64_t family, std::uint64_t limit) {
  switch (family) {
    case 0:
      return WeightSpec::indicator_set({1, 2});
    case 1: {
      std::map<PartSize, Weight> ones;
      for (u64 s = 2; s <= std::max<u64>(limit, 2); ++s) ones[s] = 1;
      return WeightSpec::table(std::move(ones));
    }
    case 2:
      return WeightSpec::odd();
    case 3:
      return WeightSpec::identity();
  }
  throw InvalidArgument("fib family must be in [0, 3]");
}

std::vector<WeightSpec> finite_corpus() {
  return {
      parse_weights("table:0=5,2=2,3=1"),
      parse_weights("table:0=3,1=2,2=1"),
      parse_weights("table:1=1,2=1,3=1,9=3"),
      parse_weights("table:1=1,2=3,4=2"),
      parse_weights("binom"),
      parse_weights("set:0,1,2"),
      parse_weights("table:0=2,1=3,3=4,4=1"),
  };
}

std::vector<WeightSpec> standard_corpus() {
  std::vector<WeightSpec> out = finite_corpus();
  out.push_back(parse_weights("id"));
  out.push_back(parse_weights("odd"));
  out.push_back(parse_weights("avoid:a=1,m=2"));
  return out;
}

SweepPlan desk_plan(TheoremId theorem) {
  const std::vector<u64> small_primes{2, 3, 5, 7};
  SweepPlan plan;
  plan.corpus = standard_corpus();
  auto& r = plan.ranges;
  switch (theorem) {
    case TheoremId::Parity:
      r = {{"k", span_of(0, 40)}, {"n", span_of(0, 60)}};
      break;
    case TheoremId::PrimeRow:
      r = {{"p", span_of(2, 13)}, {"n", span_of(0, 50)}};
      break;
    case TheoremId::PrimePowerRow:
      r = {{"p", span_of(2, 13)}, {"m", span_of(1, 3)}, {"n", span_of(0, 50)}};
      break;
    case TheoremId::ShiftRow:
      r = {{"s", span_of(0, 3)},
           {"j", span_of(0, 6)},
           {"p", span_of(2, 7)},
           {"k", span_of(0, 10)}};
      break;
    case TheoremId::PPlus1Row:
      r = {{"p", span_of(2, 11)}, {"m", span_of(0, 4)}, {"r", span_of(0, 10)}};
      break;
    case TheoremId::Babbage:
      r = {{"p", small_primes}, {"n", span_of(0, 6)}, {"m", span_of(0, 6)}};
      break;
    case TheoremId::BabbageSingle:
      r = {{"p", small_primes}, {"r", span_of(0, 6)}};
      break;
    case TheoremId::SpRowModP2:
    case TheoremId::SpRowSmall:
      r = {{"p", small_primes}, {"s", span_of(0, 6)}, {"r", span_of(0, 6)}};
      break;
    case TheoremId::CrossSymmetry:
      r = {{"p", small_primes}, {"r", span_of(0, 6)}, {"s", span_of(0, 6)}};
      break;
    case TheoremId::Divisibility:
      r = {{"m", span_of(0, 8)}, {"k", span_of(0, 8)}, {"n", span_of(0, 40)}};
      break;
    case TheoremId::Ms:
      r = {{"p", small_primes}, {"r", span_of(0, 5)}};
      break;
    case TheoremId::Lucas:
    case TheoremId::Granville:
      r = {{"p", span_of(2, 13)}, {"k", span_of(0, 40)}, {"n", span_of(0, 50)}};
      break;
    case TheoremId::Somer:
      r = {{"p", {2, 3, 5}}, {"b", {1, 2}}, {"n", span_of(0, 10)}};
      break;
    case TheoremId::AvoidRecurrence:
      r = {{"n", span_of(0, 20)}};
      plan.corpus.clear();
      for (u64 a : {1, 2}) {
        for (u64 m : {2, 3})
          plan.corpus.push_back(WeightSpec::avoid_progression(a, m).with_zeroed(0));
      }
      break;
    case TheoremId::Glaisher:
      r = {{"p", span_of(2, 31)},
           {"m", {1, 2, 3, 5}},
           {"k", span_of(0, 6)},
           {"r", span_of(0, 4)}};
      break;
    case TheoremId::RowsumParity:
      r = {{"k", span_of(0, 12)}};
      break;
    case TheoremId::FibPrimeResidue:
      r = {{"family", span_of(0, 2)}, {"p", span_of(2, 100)}};
      plan.corpus = {fib_family(0, 0)};
      break;
    case TheoremId::FibGcd:
      r = {{"family", span_of(0, 3)}, {"m", span_of(0, 25)},
           {"n", span_of(0, 25)}};
      plan.corpus = {fib_family(0, 0)};
      break;
  }
  return plan;
}

}  // namespace extbinom
