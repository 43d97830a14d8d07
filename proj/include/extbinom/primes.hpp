#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extbinom/natural.hpp"
#include "extbinom/weights.hpp"

namespace extbinom {

bool trial_division_is_prime(std::uint64_t n);

struct PrimalityVerdict {
  std::uint64_t n = 0;
  bool is_prime = false;
  // Smallest m with 0 <= 2m <= n for which m does not divide <m, n-2m>_f.
  std::optional<std::uint64_t> witness;
  // <witness, n - 2*witness>_f, when a witness exists.
  std::optional<Natural> witness_value;
};

/// Prime test over weighted compositions: for f(0) = f(1) = 1, n > 1 is prime
/// iff m | <m, n-2m>_f for every 0 <= 2m <= n ("0 | x" meaning x = 0).
///
/// Keeps a triangle of exact coefficients sized for n <= n_max, so testing a
/// whole range costs one triangle build.
class MannShanksTester {
 public:
  // Throws HypothesisViolation unless f(0) = f(1) = 1.
  MannShanksTester(WeightSpec f, std::uint64_t n_max);

  // Throws InvalidArgument for n < 2 or n > n_max.
  PrimalityVerdict test(std::uint64_t n) const;

  std::uint64_t n_max() const noexcept { return n_max_; }

 private:
  WeightSpec f_;
  std::uint64_t n_max_;
  // rows_[m][x] = <m, x>_f for x <= n_max - 2m
  std::vector<std::vector<Natural>> rows_;
};

PrimalityVerdict mann_shanks_is_prime(std::uint64_t n, const WeightSpec& f);

}  // namespace extbinom
