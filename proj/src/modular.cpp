#include "extbinom/modular.hpp"

#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "extbinom/errors.hpp"
#include "extbinom/kernels.hpp"
#include "extbinom/primes.hpp"

namespace extbinom {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxModulus = u64{1} << 32;

void require_small_prime(u64 p) {
  require_prime(p);
  if (p >= kMaxModulus)
    throw InvalidArgument("prime modulus must be below 2^32, got " +
                          std::to_string(p));
}

// True when <k, n>_f vanishes because n exceeds k*S.
bool beyond_support(const SupportBound& bound, u64 k, u64 n) {
  if (!bound) return false;
  return static_cast<u128>(k) * *bound < n;
}

// Rows 0..k of <j, x>_f mod p, extended on demand, each stored to a fixed
// width.
class ResidueRows {
 public:
  ResidueRows(const WeightSpec& f, u64 p, u64 width) : p_(p), width_(width) {
    for (const auto& [s, w] : support_points(f, width - 1)) {
      if (w % p != 0) points_.emplace_back(s, w % p);
    }
    rows_.push_back(std::vector<u64>(width_, 0));
    rows_[0][0] = 1;
  }

  u64 at(u64 k, u64 x) {
    if (x >= width_) return 0;
    while (rows_.size() <= k) {
      std::vector<u64> next(width_);
      kernels::next_row_mod(rows_.back(), points_, p_, next);
      rows_.push_back(std::move(next));
    }
    return rows_[k][x];
  }

 private:
  u64 p_;
  u64 width_;
  std::vector<std::pair<PartSize, u64>> points_;
  std::vector<std::vector<u64>> rows_;
};

struct PairHash {
  std::size_t operator()(const std::pair<u64, u64>& key) const noexcept {
    return std::hash<u64>{}(key.first * 0x9E3779B97F4A7C15ULL ^ key.second);
  }
};

class GranvilleEvaluator {
 public:
  GranvilleEvaluator(const WeightSpec& f, u64 p, u64 width)
      : p_(p), bound_(support_bound(f)), base_(f, p, width) {}

  u64 value(u64 k, u64 n, u64 depth) {
    if (depth > stats_.max_depth) stats_.max_depth = depth;
    if (beyond_support(bound_, k, n)) return 0;
    if (k < p_) return base_.at(k, n);
    const auto key = std::make_pair(k, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const u64 k0 = k % p_;
    const u64 n0 = n % p_;
    const u64 kq = k / p_;
    const u64 nq = n / p_;
    u64 acc = 0;
    for (u64 m = 0; m <= nq; ++m) {
      const u128 column = static_cast<u128>(n0) + static_cast<u128>(m) * p_;
      if (column > std::numeric_limits<u64>::max()) break;
      if (beyond_support(bound_, k0, static_cast<u64>(column))) break;
      const u64 low = base_.at(k0, static_cast<u64>(column));
      if (low == 0) continue;
      acc = (acc + low * value(kq, nq - m, depth + 1)) % p_;
    }
    memo_.emplace(key, acc);
    return acc;
  }

  GranvilleStats stats() const {
    GranvilleStats out = stats_;
    out.memo_entries = memo_.size();
    return out;
  }

 private:
  u64 p_;
  SupportBound bound_;
  ResidueRows base_;
  std::unordered_map<std::pair<u64, u64>, u64, PairHash> memo_;
  GranvilleStats stats_;
};

class ParityEvaluator {
 public:
  explicit ParityEvaluator(const WeightSpec& f)
      : f_(f), bound_(support_bound(f)) {}

  u64 value(u64 k, u64 n) {
    if (k == 0) return n == 0 ? 1 : 0;
    if (beyond_support(bound_, k, n)) return 0;
    const auto key = std::make_pair(k, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    u64 out = 0;
    if (k % 2 == 0) {
      out = n % 2 == 1 ? 0 : value(k / 2, n / 2);
    } else {
      const u64 half = n / 2;
      const u64 offset = n % 2;
      for (u64 s = 0; s <= half; ++s) {
        const u64 part = 2 * s + offset;
        if (bound_ && part > *bound_) break;
        if (f_(part) % 2 == 0) continue;
        out ^= value(k / 2, half - s);
      }
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  const WeightSpec& f_;
  SupportBound bound_;
  std::unordered_map<std::pair<u64, u64>, u64, PairHash> memo_;
};

class LucasEvaluator {
 public:
  LucasEvaluator(u64 k, u64 n, const WeightSpec& f, u64 p,
                 const LucasOptions& options)
      : f_(f), p_(p), bound_(support_bound(f)), budget_(options.budget) {
    do {
      digits_.push_back(k % p);
      k /= p;
    } while (k > 0);
    // Place values p^i; digits_.size() <= 64 so p^i fits while p^i <= k.
    u64 place = 1;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      places_.push_back(place);
      if (i + 1 < digits_.size()) place *= p;
    }
    // Largest sum of s_j p^j over j < i, for pruning.
    lower_reach_.assign(digits_.size(), 0);
    if (bound_) {
      u128 reach = 0;
      for (std::size_t i = 0; i < digits_.size(); ++i) {
        lower_reach_[i] = reach;
        reach += static_cast<u128>(digits_[i]) * *bound_ * places_[i];
      }
    }
    if (!bound_ && n > options.column_cap)
      throw BudgetExceeded("lucas_mod: n = " + std::to_string(n) +
                           " exceeds the column cap " +
                           std::to_string(options.column_cap) +
                           " for unbounded support");
    width_ = bound_ ? (p - 1) * *bound_ + 1 : n + 1;
  }

  u64 run(u64 n) { return walk(digits_.size() - 1, n); }

 private:
  u64 walk(std::size_t i, u64 remaining) {
    if (++steps_ > budget_.max_steps)
      throw BudgetExceeded("lucas_mod: more than " +
                           std::to_string(budget_.max_steps) + " tuples");
    const u64 digit = digits_[i];
    if (i == 0) return inner(digit, remaining);
    const u64 place = places_[i];
    u64 hi = remaining / place;
    if (bound_) hi = std::min<u64>(hi, digit * *bound_);
    u64 lo = 0;
    if (bound_ && remaining > lower_reach_[i]) {
      const u128 excess = remaining - lower_reach_[i];
      lo = static_cast<u64>((excess + place - 1) / place);
    }
    u64 acc = 0;
    for (u64 s = lo; s <= hi; ++s) {
      const u64 top = inner(digit, s);
      if (top == 0) continue;
      acc = (acc + top * walk(i - 1, remaining - s * place)) % p_;
    }
    return acc;
  }

  // <digit, column>_f computed exactly, then reduced.
  u64 inner(u64 digit, u64 column) {
    if (beyond_support(bound_, digit, column)) return 0;
    auto it = rows_.find(digit);
    if (it == rows_.end()) {
      std::vector<u64> reduced;
      for (const Natural& v : ext_binom_row(digit, f_, width_ - 1))
        reduced.push_back(reduce(v, p_));
      it = rows_.emplace(digit, std::move(reduced)).first;
    }
    return column < it->second.size() ? it->second[column] : 0;
  }

  const WeightSpec& f_;
  u64 p_;
  SupportBound bound_;
  Budget budget_;
  u64 steps_ = 0;
  u64 width_ = 0;
  std::vector<u64> digits_;
  std::vector<u64> places_;
  std::vector<u128> lower_reach_;
  std::map<u64, std::vector<u64>> rows_;
};

}  // namespace

Residue::Residue(std::uint64_t value, std::uint64_t modulus)
    : value_(value), modulus_(modulus) {
  if (modulus < 2) throw InvalidArgument("residue modulus must be >= 2");
  if (value >= modulus)
    throw InvalidArgument("residue value must lie in [0, modulus)");
}

void require_prime(std::uint64_t p) {
  if (!trial_division_is_prime(p))
    throw NotPrime(std::to_string(p) + " is not prime");
}

Residue prime_row(std::uint64_t p, std::uint64_t n, const WeightSpec& f) {
  require_prime(p);
  return Residue(n % p == 0 ? f(n / p) % p : 0, p);
}

Residue prime_power_row(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                        const WeightSpec& f) {
  require_prime(p);
  if (m == 0) throw InvalidArgument("prime_power_row needs m >= 1");
  u128 power = 1;
  for (u64 i = 0; i < m && power <= n; ++i) power *= p;
  if (power > n) return Residue(n == 0 ? f(0) % p : 0, p);
  const u64 q = static_cast<u64>(power);
  return Residue(n % q == 0 ? f(n / q) % p : 0, p);
}

Residue parity(std::uint64_t k, std::uint64_t n, const WeightSpec& f) {
  ParityEvaluator eval(f);
  return Residue(eval.value(k, n), 2);
}

Residue lucas_mod(std::uint64_t k, std::uint64_t n, const WeightSpec& f,
                  std::uint64_t p, const LucasOptions& options) {
  require_small_prime(p);
  if (beyond_support(support_bound(f), k, n)) return Residue(0, p);
  LucasEvaluator eval(k, n, f, p, options);
  return Residue(eval.run(n), p);
}

Residue granville_mod(std::uint64_t k, std::uint64_t n, const WeightSpec& f,
                      std::uint64_t p, const GranvilleOptions& options,
                      GranvilleStats* stats) {
  require_small_prime(p);
  const SupportBound bound = support_bound(f);
  if (beyond_support(bound, k, n)) {
    if (stats) *stats = GranvilleStats{};
    return Residue(0, p);
  }
  // Base rows have k < p, so columns past (p-1)*S are zero.
  u64 width = 0;
  if (bound) {
    width = (p - 1) * *bound + 1;
  } else {
    if (n > options.column_cap)
      throw BudgetExceeded("granville_mod: n = " + std::to_string(n) +
                           " exceeds the column cap " +
                           std::to_string(options.column_cap) +
                           " for unbounded support");
    width = n + 1;
  }
  GranvilleEvaluator eval(f, p, width);
  const u64 value = eval.value(k, n, 1);
  if (stats) *stats = eval.stats();
  return Residue(value, p);
}

WeightSpec babbage_weight(const WeightSpec& f, std::uint64_t p) {
  require_prime(p);
  const SupportBound bound = support_bound(f);
  if (!bound)
    throw DivergentBracket("babbage_weight needs finitely supported f");
  const std::vector<Natural> row = ext_binom_row(p, f, p * *bound);
  std::map<PartSize, Weight> g;
  for (u64 r = 0; r <= *bound; ++r) {
    const Natural& v = row[r * p];
    if (!v.fits_ulong_p())
      throw InvalidArgument("babbage_weight: g(" + std::to_string(r) +
                            ") = " + to_decimal(v) +
                            " exceeds the native weight range");
    g[r] = v.get_ui();
  }
  return WeightSpec::table(std::move(g));
}

}  // namespace extbinom
