#pragma once

#include <string>

#include <json.hpp>

#include "extbinom/congruences.hpp"
#include "extbinom/exact.hpp"
#include "extbinom/primes.hpp"

// Text and JSON renderings. Big values are always decimal strings.
namespace extbinom::emit {

// Header "k\t0\t1...\tn_max", then one line per row; cells past the stored
// width print as 0.
std::string triangle_tsv(const TriangleTable& table);
// [["1","0",...], ...], every row n_max + 1 entries.
nlohmann::json triangle_json(const TriangleTable& table);

// Header "n\tc", then "n\tc_f(n)" lines.
std::string sequence_tsv(const SequenceTable& table);
nlohmann::json sequence_json(const SequenceTable& table);

// {"theorem", "params", "lhs", "rhs", "modulus", "holds"}; params carries the
// weight spec text under "weights".
nlohmann::json report_json(const CongruenceReport& report);
// {"theorem", "total", "skipped", "failures"}
nlohmann::json summary_json(const SweepSummary& summary);

nlohmann::json verdict_json(const PrimalityVerdict& verdict);

}  // namespace extbinom::emit
