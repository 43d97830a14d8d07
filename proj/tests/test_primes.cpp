#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extbinom/congruences.hpp"
#include "extbinom/errors.hpp"
#include "extbinom/primes.hpp"

using namespace extbinom;

namespace {

WeightSpec identity_with_one(std::uint64_t limit) {
  std::map<PartSize, Weight> entries{{0, 1}};
  for (PartSize s = 1; s <= limit; ++s) entries[s] = s;
  return WeightSpec::table(std::move(entries));
}

}  // namespace

TEST_CASE("trial division") {
  CHECK(trial_division_is_prime(2));
  CHECK(!trial_division_is_prime(91));
  CHECK(trial_division_is_prime(97));
  CHECK(!trial_division_is_prime(0));
  CHECK(!trial_division_is_prime(1));
  CHECK(trial_division_is_prime(4294967291ull));
}

TEST_CASE("worked cases") {
  auto f = identity_with_one(10);
  auto five = mann_shanks_is_prime(5, f);
  CHECK(five.is_prime);
  CHECK(!five.witness.has_value());
  auto six = mann_shanks_is_prime(6, f);
  CHECK(!six.is_prime);
  REQUIRE(six.witness.has_value());
  CHECK(*six.witness == 2);
  CHECK(*six.witness_value == 5);
  for (auto g : {f, WeightSpec::binomial()}) CHECK(mann_shanks_is_prime(2, g).is_prime);
}

TEST_CASE("agrees with trial division") {
  for (auto f : {WeightSpec::binomial(), identity_with_one(120),
                 WeightSpec::table({{0, 1}, {1, 1}, {2, 7}, {3, 2}})}) {
    MannShanksTester tester(f, 120);
    for (std::uint64_t n = 2; n <= 120; ++n) {
      auto v = tester.test(n);
      CAPTURE(n);
      CHECK(v.is_prime == trial_division_is_prime(n));
      CHECK(v.witness.has_value() == !v.is_prime);
      if (v.witness) CHECK(2 * *v.witness <= n);
    }
  }
}

TEST_CASE("witness matches ms congruence") {
  auto f = WeightSpec::binomial();
  for (std::uint64_t n : {9, 15, 21, 25, 35, 49, 91}) {
    std::uint64_t p = 3;
    while (n % p != 0) p += 2;
    std::uint64_t m = (n - p) / 2;
    std::uint64_t r = n / p;
    auto rep = verify(TheoremId::Ms, {{"p", p}, {"r", r}}, f);
    CHECK(rep.holds);
    auto v = mann_shanks_is_prime(n, f);
    CHECK(!v.is_prime);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness <= m);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(mann_shanks_is_prime(7, WeightSpec::identity()),
                  HypothesisViolation);
  CHECK_THROWS_AS(mann_shanks_is_prime(7, WeightSpec::table({{0, 1}, {1, 2}})),
                  HypothesisViolation);
  MannShanksTester tester(WeightSpec::binomial(), 10);
  CHECK_THROWS_AS(tester.test(1), InvalidArgument);
  CHECK_THROWS_AS(tester.test(11), InvalidArgument);
}
