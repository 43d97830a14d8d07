#include "extbinom/exact.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "extbinom/errors.hpp"
#include "extbinom/kernels.hpp"

namespace extbinom {

Budget default_budget() {
  Budget budget;
  if (const char* env = std::getenv("EXTBINOM_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) budget.max_steps = v;
    } catch (const std::exception&) {
      // Unparsable override: keep the default.
    }
  }
  return budget;
}

namespace {

class StepCounter {
 public:
  StepCounter(Budget budget, const char* what)
      : limit_(budget.max_steps), what_(what) {}

  void tick() {
    if (++steps_ > limit_)
      throw BudgetExceeded(std::string(what_) + ": more than " +
                           std::to_string(limit_) + " steps");
  }

 private:
  std::uint64_t steps_ = 0;
  std::uint64_t limit_;
  const char* what_;
};

void enumerate_compositions(std::uint64_t parts_left, std::uint64_t remaining,
                            const Natural& product, const WeightSpec& f,
                            StepCounter& steps, Natural& total) {
  steps.tick();
  if (parts_left == 1) {
    const Weight w = f(remaining);
    if (w != 0) total += product * to_natural(w);
    return;
  }
  for (std::uint64_t part = 0; part <= remaining; ++part) {
    const Weight w = f(part);
    if (w == 0) continue;
    enumerate_compositions(parts_left - 1, remaining - part,
                           product * to_natural(w), f, steps, total);
  }
}

struct PartitionWalk {
  std::uint64_t k;
  const WeightSpec& f;
  StepCounter& steps;
  Natural total = 0;
  // multiplicities[i] = k_i for part size i >= 1
  std::vector<std::uint64_t> multiplicities;

  // Assign k_i for part sizes i = size, size-1, ..., 1.
  void walk(std::uint64_t size, std::uint64_t remaining,
            std::uint64_t parts_used) {
    steps.tick();
    if (size == 0) {
      if (remaining == 0) total += term(k - parts_used);
      return;
    }
    const std::uint64_t cap =
        std::min(remaining / size, k - parts_used);
    for (std::uint64_t count = 0; count <= cap; ++count) {
      if (count > 0 && f(size) == 0) break;
      multiplicities[size] = count;
      walk(size - 1, remaining - count * size, parts_used + count);
    }
    multiplicities[size] = 0;
  }

  // multinomial(k; k_0..k_n) as prod C(k_0 + ... + k_i, k_i), times the
  // weight product.
  Natural term(std::uint64_t zeros) const {
    Natural coeff = pow_natural(to_natural(f(0)), zeros);
    if (sgn(coeff) == 0) return coeff;
    std::uint64_t partial = zeros;
    for (std::size_t i = 1; i < multiplicities.size(); ++i) {
      const std::uint64_t ki = multiplicities[i];
      if (ki == 0) continue;
      partial += ki;
      coeff *= ordinary_binomial(partial, ki);
      coeff *= pow_natural(to_natural(f(i)), ki);
    }
    return coeff;
  }
};

std::vector<Natural> weight_series(const WeightSpec& f, std::uint64_t n_max) {
  std::vector<Natural> series(n_max + 1);
  for (const auto& [s, w] : support_points(f, n_max)) series[s] = to_natural(w);
  return series;
}

std::uint64_t stored_width(const SupportBound& bound, std::uint64_t k,
                           std::uint64_t n_max) {
  if (!bound) return n_max + 1;
  const std::uint64_t S = *bound;
  if (S != 0 && k > n_max / S) return n_max + 1;
  return std::min(n_max, k * S) + 1;
}

std::vector<std::vector<Natural>> build_rows(const WeightSpec& f,
                                             std::uint64_t k_max,
                                             std::uint64_t n_max,
                                             kernels::Exec exec) {
  const SupportBound bound = support_bound(f);
  const auto points = support_points(f, n_max);
  std::vector<std::vector<Natural>> rows;
  rows.reserve(k_max + 1);
  rows.push_back({Natural(1)});
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    std::vector<Natural> next(stored_width(bound, k, n_max));
    kernels::next_row(rows.back(), points, next, exec);
    rows.push_back(std::move(next));
  }
  return rows;
}

}  // namespace

Natural count_by_enumeration(std::uint64_t k, std::uint64_t n,
                             const WeightSpec& f, Budget budget) {
  if (k == 0) return Natural(n == 0 ? 1 : 0);
  StepCounter steps(budget, "count_by_enumeration");
  Natural total = 0;
  enumerate_compositions(k, n, Natural(1), f, steps, total);
  return total;
}

Natural ext_binom_by_partitions(std::uint64_t k, std::uint64_t n,
                                const WeightSpec& f, Budget budget) {
  StepCounter steps(budget, "ext_binom_by_partitions");
  PartitionWalk walk{k, f, steps, 0, std::vector<std::uint64_t>(n + 1, 0)};
  walk.walk(n, n, 0);
  return walk.total;
}

std::vector<Natural> ext_binom_row(std::uint64_t k, const WeightSpec& f,
                                   std::uint64_t n_max) {
  const SupportBound bound = support_bound(f);
  const std::uint64_t width = stored_width(bound, k, n_max);
  const auto points = support_points(f, width - 1);
  // Row recurrence costs k*|points| small products per column, powering
  // about 2*log2(k) full products.
  const unsigned __int128 recurrence_cost =
      static_cast<unsigned __int128>(k) * points.size();
  const unsigned __int128 powering_cost =
      static_cast<unsigned __int128>(2 * std::bit_width(k)) * width;
  std::vector<Natural> row;
  if (recurrence_cost <= powering_cost) {
    row.push_back(Natural(1));
    std::vector<Natural> next;
    for (std::uint64_t j = 1; j <= k; ++j) {
      next.assign(stored_width(bound, j, width - 1), Natural(0));
      kernels::next_row(row, points, next);
      row.swap(next);
    }
  } else {
    row = kernels::truncated_power(weight_series(f, width - 1), k, width - 1);
  }
  row.resize(n_max + 1);
  return row;
}

Natural ext_binom(std::uint64_t k, std::uint64_t n, const WeightSpec& f) {
  const SupportBound bound = support_bound(f);
  if (bound && n > 0 && (*bound == 0 || k < n / *bound + (n % *bound != 0)))
    return Natural(0);
  return ext_binom_row(k, f, n)[n];
}

Natural TriangleTable::at(std::uint64_t k, std::uint64_t n) const {
  if (k >= rows_.size() || n >= rows_[k].size()) return Natural(0);
  return rows_[k][n];
}

TriangleTable triangle(const WeightSpec& f, std::uint64_t k_max,
                       std::uint64_t n_max) {
  TriangleTable table(f, n_max);
  table.rows_ = build_rows(f, k_max, n_max, kernels::Exec::Parallel);
  return table;
}

TriangleTable triangle_serial(const WeightSpec& f, std::uint64_t k_max,
                              std::uint64_t n_max) {
  TriangleTable table(f, n_max);
  table.rows_ = build_rows(f, k_max, n_max, kernels::Exec::Serial);
  return table;
}

SequenceTable c_sequence(const WeightSpec& f, std::uint64_t N) {
  if (f(0) > 0)
    throw InfiniteCount("c_f(n) is infinite when f(0) > 0 (f(0) = " +
                        std::to_string(f(0)) + ")");
  const auto points = support_points(f, N);
  std::vector<Natural> values(N + 1);
  values[0] = 1;
  for (std::uint64_t n = 1; n <= N; ++n) {
    Natural acc = 0;
    for (const auto& [s, w] : points) {
      if (s > n) break;
      mpz_addmul_ui(acc.get_mpz_t(), values[n - s].get_mpz_t(), w);
    }
    values[n] = std::move(acc);
  }
  return SequenceTable(f, std::move(values));
}

Natural bracket(std::uint64_t k, std::uint64_t r, std::uint64_t m,
                const WeightSpec& f) {
  if (m == 0) throw InvalidArgument("bracket: modulus m must be >= 1");
  if (r >= m) throw InvalidArgument("bracket: residue r must satisfy r < m");
  const SupportBound bound = support_bound(f);
  if (!bound)
    throw DivergentBracket("bracket sum over an unbounded support diverges");
  const std::uint64_t top = k * *bound;
  const std::vector<Natural> row = ext_binom_row(k, f, top);
  Natural sum = 0;
  for (std::uint64_t n = r; n <= top; n += m) sum += row[n];
  return sum;
}

}  // namespace extbinom
