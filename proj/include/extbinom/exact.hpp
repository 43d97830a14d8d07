#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "extbinom/natural.hpp"
#include "extbinom/weights.hpp"

namespace extbinom {

// Work limit for the enumeration oracles, in visited tuples.
struct Budget {
  std::uint64_t max_steps = 10'000'000;
};

// Default budget, overridden by EXTBINOM_BUDGET (a decimal count) when set.
Budget default_budget();

/// Brute force: the sum of f(pi_1)...f(pi_k) over all k-tuples of
/// nonnegative integers summing to n. Throws BudgetExceeded.
Natural count_by_enumeration(std::uint64_t k, std::uint64_t n,
                             const WeightSpec& f,
                             Budget budget = default_budget());

/// Sum over part-multiplicity vectors (k_0..k_n) with sum k_i = k and
/// sum i*k_i = n of multinomial(k; k_0..k_n) * prod f(i)^{k_i}.
/// Throws BudgetExceeded.
Natural ext_binom_by_partitions(std::uint64_t k, std::uint64_t n,
                                const WeightSpec& f,
                                Budget budget = default_budget());

/// <k, n>_f: coefficient of x^n in (sum_s f(s) x^s)^k.
Natural ext_binom(std::uint64_t k, std::uint64_t n, const WeightSpec& f);

/// Columns 0..n_max of row k.
std::vector<Natural> ext_binom_row(std::uint64_t k, const WeightSpec& f,
                                   std::uint64_t n_max);

/// Rows 0..k_max of <k, n>_f built by the weighted row recurrence.
/// Row k is stored up to column min(n_max, k*S) when the support ends at S;
/// reads past the stored width are zero.
class TriangleTable {
 public:
  const WeightSpec& weights() const noexcept { return weights_; }
  std::uint64_t k_max() const noexcept { return rows_.size() - 1; }
  std::uint64_t n_max() const noexcept { return n_max_; }

  std::span<const Natural> row(std::uint64_t k) const { return rows_.at(k); }
  // Zero outside the stored region, including k > k_max.
  Natural at(std::uint64_t k, std::uint64_t n) const;

 private:
  friend TriangleTable triangle(const WeightSpec&, std::uint64_t,
                                std::uint64_t);
  friend TriangleTable triangle_serial(const WeightSpec&, std::uint64_t,
                                       std::uint64_t);
  TriangleTable(WeightSpec weights, std::uint64_t n_max)
      : weights_(std::move(weights)), n_max_(n_max) {}

  WeightSpec weights_;
  std::uint64_t n_max_;
  std::vector<std::vector<Natural>> rows_;
};

TriangleTable triangle(const WeightSpec& f, std::uint64_t k_max,
                       std::uint64_t n_max);

// Serial reference build of the same table, kept for tests and benchmarks.
TriangleTable triangle_serial(const WeightSpec& f, std::uint64_t k_max,
                              std::uint64_t n_max);

/// c_f(0..N): compositions of n with any number of positive parts.
class SequenceTable {
 public:
  const WeightSpec& weights() const noexcept { return weights_; }
  std::uint64_t size() const noexcept { return values_.size(); }
  const Natural& operator[](std::uint64_t n) const { return values_.at(n); }
  std::span<const Natural> values() const noexcept { return values_; }

 private:
  friend SequenceTable c_sequence(const WeightSpec&, std::uint64_t);
  SequenceTable(WeightSpec weights, std::vector<Natural> values)
      : weights_(std::move(weights)), values_(std::move(values)) {}

  WeightSpec weights_;
  std::vector<Natural> values_;
};

// Throws InfiniteCount when f(0) > 0.
SequenceTable c_sequence(const WeightSpec& f, std::uint64_t N);

/// Sum of <k, n>_f over n = r (mod m). Needs finite support
/// (DivergentBracket otherwise), m >= 1 and r < m.
Natural bracket(std::uint64_t k, std::uint64_t r, std::uint64_t m,
                const WeightSpec& f);

}  // namespace extbinom
