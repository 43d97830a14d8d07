#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extbinom/natural.hpp"
#include "extbinom/weights.hpp"

namespace extbinom {

enum class TheoremId {
  Parity,
  PrimeRow,
  ShiftRow,
  PPlus1Row,
  PrimePowerRow,
  Babbage,
  BabbageSingle,
  SpRowModP2,
  SpRowSmall,
  CrossSymmetry,
  Divisibility,
  Ms,
  Lucas,
  Granville,
  Somer,
  AvoidRecurrence,
  Glaisher,
  RowsumParity,
  FibPrimeResidue,
  FibGcd,
};

std::span<const TheoremId> all_theorems();
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

using Params = std::map<std::string, std::uint64_t>;

/// One instance of a congruence lhs = rhs (mod modulus), both sides exact.
/// modulus 0 marks an identity (holds iff lhs == rhs); modulus 1 holds
/// trivially.
struct CongruenceReport {
  TheoremId theorem;
  Params params;
  std::string weights;
  Natural lhs;
  Natural rhs;
  std::uint64_t modulus = 0;
  bool holds = false;
};

/// Instantiates a theorem and checks it by exact arithmetic only.
/// Throws HypothesisViolation when params or f fall outside the theorem's
/// hypotheses, InvalidArgument when a required parameter is missing.
///
/// Parameters per theorem:
///   parity: k, n                 prime_row: p, n
///   shift_row: k, s, p, j        p_plus_1_row: p, m, r
///   prime_power_row: p, m, n     babbage: n, m, p
///   babbage_single: r, p         sp_row_mod_p2: s, r, p
///   sp_row_small: s, r, p        cross_symmetry: r, s, p
///   divisibility: m, k, n        ms: p, r
///   lucas: k, n, p               granville: k, n, p
///   somer: p, b, n               avoid_recurrence: n
///   glaisher: p, m, k, r         rowsum_parity: k
///   fib_prime_residue: family, p fib_gcd: family, m, n
/// The fib_* theorems ignore f and use the fixed family selected by
/// `family` (see fib_family).
CongruenceReport verify(TheoremId theorem, const Params& params,
                        const WeightSpec& f);

using ParamRanges = std::map<std::string, std::vector<std::uint64_t>>;

struct SweepSummary {
  TheoremId theorem;
  std::uint64_t total_cases = 0;
  std::uint64_t skipped = 0;
  // In parameter-tuple order (names ascending, then corpus order).
  std::vector<CongruenceReport> failures;

  std::uint64_t successes() const noexcept {
    return total_cases - failures.size();
  }
};

/// verify over ranges x corpus. Hypothesis violations are skipped and
/// counted; other errors propagate. The result does not depend on the
/// number of threads.
SweepSummary sweep(TheoremId theorem, const ParamRanges& ranges,
                   std::span<const WeightSpec> corpus);
SweepSummary sweep_serial(TheoremId theorem, const ParamRanges& ranges,
                          std::span<const WeightSpec> corpus);

struct SweepPlan {
  ParamRanges ranges;
  std::vector<WeightSpec> corpus;
};

// Desk-scale grid used by the acceptance suite and `verify` without ranges.
SweepPlan desk_plan(TheoremId theorem);

// Weight specs used by the default grids.
std::vector<WeightSpec> finite_corpus();
std::vector<WeightSpec> standard_corpus();

// F_0 = 0, F_1 = 1.
Natural fib(std::uint64_t n);

/// Weights for c_f(n) in Fibonacci form:
///   0: 1_{1,2}          c(n) = F_{n+1}
///   1: 1_{N \ {0,1}}    c(n) = F_{n-1}   (n >= 1)
///   2: 1_{odd}          c(n) = F_n       (n >= 1)
///   3: Id               c(n) = F_{2n}    (n >= 1)
/// Family 1 is a table on [2, limit], which fixes c(n) for n <= limit.
WeightSpec fib_family(std::uint64_t family, std::uint64_t limit);

}  // namespace extbinom
