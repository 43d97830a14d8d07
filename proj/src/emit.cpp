#include "extbinom/emit.hpp"

namespace extbinom::emit {

std::string triangle_tsv(const TriangleTable& table) {
  std::string out = "k";
  for (std::uint64_t n = 0; n <= table.n_max(); ++n)
    out += "\t" + std::to_string(n);
  out += '\n';
  for (std::uint64_t k = 0; k <= table.k_max(); ++k) {
    out += std::to_string(k);
    for (std::uint64_t n = 0; n <= table.n_max(); ++n)
      out += "\t" + to_decimal(table.at(k, n));
    out += '\n';
  }
  return out;
}

nlohmann::json triangle_json(const TriangleTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint64_t k = 0; k <= table.k_max(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint64_t n = 0; n <= table.n_max(); ++n)
      row.push_back(to_decimal(table.at(k, n)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sequence_tsv(const SequenceTable& table) {
  std::string out = "n\tc\n";
  for (std::uint64_t n = 0; n < table.size(); ++n)
    out += std::to_string(n) + "\t" + to_decimal(table[n]) + "\n";
  return out;
}

nlohmann::json sequence_json(const SequenceTable& table) {
  nlohmann::json values = nlohmann::json::array();
  for (const Natural& v : table.values()) values.push_back(to_decimal(v));
  return values;
}

nlohmann::json report_json(const CongruenceReport& report) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  params["weights"] = report.weights;
  return {
      {"theorem", std::string(theorem_name(report.theorem))},
      {"params", std::move(params)},
      {"lhs", to_decimal(report.lhs)},
      {"rhs", to_decimal(report.rhs)},
      {"modulus", report.modulus},
      {"holds", report.holds},
  };
}

nlohmann::json summary_json(const SweepSummary& summary) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& report : summary.failures)
    failures.push_back(report_json(report));
  return {
      {"theorem", std::string(theorem_name(summary.theorem))},
      {"total", summary.total_cases},
      {"skipped", summary.skipped},
      {"failures", std::move(failures)},
  };
}

nlohmann::json verdict_json(const PrimalityVerdict& verdict) {
  nlohmann::json out = {{"n", verdict.n}, {"is_prime", verdict.is_prime}};
  if (verdict.witness) {
    out["witness"] = *verdict.witness;
    out["witness_value"] = to_decimal(*verdict.witness_value);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace extbinom::emit
