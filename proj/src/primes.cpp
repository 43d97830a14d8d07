#include "extbinom/primes.hpp"

#include <string>

#include "extbinom/errors.hpp"
#include "extbinom/kernels.hpp"

namespace extbinom {

bool trial_division_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

MannShanksTester::MannShanksTester(WeightSpec f, std::uint64_t n_max)
    : f_(std::move(f)), n_max_(n_max) {
  if (f_(0) != 1 || f_(1) != 1)
    throw HypothesisViolation(
        "prime criterion needs f(0) = f(1) = 1, got f(0) = " +
        std::to_string(f_(0)) + ", f(1) = " + std::to_string(f_(1)));
  // Row m only ever needs columns up to n_max - 2m, and row m is built
  // from row m-1, which covers two more columns than that.
  const auto points = support_points(f_, n_max_);
  rows_.push_back(std::vector<Natural>(n_max_ + 1));
  rows_[0][0] = 1;
  for (std::uint64_t m = 1; 2 * m <= n_max_; ++m) {
    std::vector<Natural> next(n_max_ - 2 * m + 1);
    kernels::next_row(rows_.back(), points, next);
    rows_.push_back(std::move(next));
  }
}

PrimalityVerdict MannShanksTester::test(std::uint64_t n) const {
  if (n < 2) throw InvalidArgument("prime criterion is stated for n > 1");
  if (n > n_max_)
    throw InvalidArgument("n = " + std::to_string(n) +
                          " exceeds the tester's n_max = " +
                          std::to_string(n_max_));
  PrimalityVerdict verdict;
  verdict.n = n;
  for (std::uint64_t m = 0; 2 * m <= n; ++m) {
    const Natural& value = rows_[m][n - 2 * m];
    const bool divides = m == 0 ? sgn(value) == 0
                                : mpz_divisible_ui_p(value.get_mpz_t(), m) != 0;
    if (!divides) {
      verdict.witness = m;
      verdict.witness_value = value;
      break;
    }
  }
  verdict.is_prime = !verdict.witness.has_value();
  return verdict;
}

PrimalityVerdict mann_shanks_is_prime(std::uint64_t n, const WeightSpec& f) {
  if (n < 2) throw InvalidArgument("prime criterion is stated for n > 1");
  return MannShanksTester(f, n).test(n);
}

}  // namespace extbinom
