#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "extbinom/errors.hpp"
#include "extbinom/modular.hpp"

using namespace extbinom;

namespace {

const WeightSpec kTri = WeightSpec::table({{0, 5}, {2, 2}, {3, 1}});
const WeightSpec kEx6 = WeightSpec::table({{0, 3}, {1, 2}, {2, 1}});

std::vector<WeightSpec> corpus() {
  return {kTri,
          kEx6,
          WeightSpec::table({{1, 1}, {2, 3}, {4, 2}}),
          WeightSpec::indicator_set({1, 2}),
          WeightSpec::identity(),
          WeightSpec::binomial(),
          WeightSpec::odd()};
}

std::uint64_t ceil_log(std::uint64_t p, std::uint64_t k) {
  std::uint64_t e = 0;
  for (unsigned __int128 v = 1; v < k; v *= p) ++e;
  return e;
}

}  // namespace

TEST_CASE("residue") {
  CHECK(Residue(3, 5).value() == 3);
  CHECK(Residue(3, 5) == Residue(3, 5));
  CHECK_THROWS_AS(Residue(5, 5), InvalidArgument);
  CHECK_THROWS_AS(Residue(0, 1), InvalidArgument);
}

TEST_CASE("prime_row") {
  CHECK(prime_row(3, 6, kTri) == Residue(2, 3));
  CHECK(reduce(ext_binom(3, 6, kTri), 3) == 2);
  for (const auto& f : corpus()) CHECK(prime_row(5, 3, f).value() == 0);
  for (const auto& f : corpus())
    for (std::uint64_t r = 0; r <= 6; ++r)
      CHECK(prime_row(2, 2 * r, f).value() == reduce(ext_binom(2, 2 * r, f), 2));
  CHECK_THROWS_AS(prime_row(4, 2, kTri), NotPrime);
  CHECK_THROWS_AS(prime_row(1, 2, kTri), NotPrime);
}

TEST_CASE("prime_power_row") {
  CHECK(prime_power_row(2, 2, 8, kEx6) == Residue(1, 2));
  CHECK(prime_power_row(2, 3, 5, kEx6).value() == 0);
  for (const auto& f : corpus())
    for (std::uint64_t r = 0; r <= 3; ++r)
      CHECK(prime_power_row(3, 2, 9 * r, f).value() ==
            reduce(ext_binom(9, 9 * r, f), 3));
  CHECK_THROWS_AS(prime_power_row(2, 0, 4, kEx6), InvalidArgument);
  CHECK_THROWS_AS(prime_power_row(9, 1, 4, kEx6), NotPrime);
}

TEST_CASE("parity") {
  CHECK(parity(13, 14, kEx6).value() == 0);
  for (const auto& f : corpus()) CHECK(parity(4, 7, f).value() == 0);
  for (const auto& f : corpus()) {
    auto t = triangle(f, 40, 60);
    for (std::uint64_t k = 0; k <= 40; ++k)
      for (std::uint64_t n = 0; n <= 60; ++n)
        CHECK(parity(k, n, f).value() == reduce(t.at(k, n), 2));
  }
}

TEST_CASE("lucas and granville agree with exact") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (const auto& f : corpus()) {
      auto t = triangle(f, 50, 60);
      for (std::uint64_t k = 0; k <= 50; ++k)
        for (std::uint64_t n = 0; n <= 60; ++n) {
          auto expect = reduce(t.at(k, n), p);
          CHECK(lucas_mod(k, n, f, p).value() == expect);
          CHECK(granville_mod(k, n, f, p).value() == expect);
        }
    }
  }
  CHECK(lucas_mod(13, 14, kEx6, 2).value() == 0);
  CHECK(granville_mod(13, 14, kEx6, 2).value() == 0);
  CHECK(lucas_mod(4, 5, kTri, 7).value() == reduce(ext_binom(4, 5, kTri), 7));
}

TEST_CASE("granville on prime rows") {
  for (std::uint64_t p : {3, 5})
    for (const auto& f : corpus())
      for (std::uint64_t r = 0; r <= 4; ++r)
        CHECK(granville_mod(p, p * r, f, p).value() == eval(f, r) % p);
}

TEST_CASE("granville cross check to 200") {
  auto f = WeightSpec::indicator_set({1, 2});
  auto t = triangle(f, 200, 200);
  for (std::uint64_t p : {2, 7})
    for (std::uint64_t k = 0; k <= 200; k += 3)
      for (std::uint64_t n = 0; n <= 200; ++n)
        CHECK(granville_mod(k, n, f, p).value() == reduce(t.at(k, n), p));
}

TEST_CASE("granville depth") {
  for (std::uint64_t p : {2, 3, 7})
    for (std::uint64_t k : {1ull, 2ull, 7ull, 100ull, 12345ull, 1'000'000'000ull}) {
      GranvilleStats stats;
      granville_mod(k, k, kEx6, p, {}, &stats);
      CHECK(stats.max_depth <= ceil_log(p, k) + 1);
      if (k >= p) CHECK(stats.memo_entries >= 1);
    }
}

TEST_CASE("granville at scale") {
  auto f = WeightSpec::table({{1, 1}, {2, 1}});
  auto r = granville_mod(1'000'000'000, 1'000'000'000, f, 7);
  CHECK(r.modulus() == 7);
  CHECK(r == granville_mod(1'000'000'000, 1'000'000'000, f, 7));
  CHECK(granville_mod(UINT64_MAX, UINT64_MAX, f, 2).modulus() == 2);
}

TEST_CASE("unbounded support caps") {
  CHECK_THROWS_AS(granville_mod(3, 50, WeightSpec::identity(), 5, {10}),
                  BudgetExceeded);
  CHECK_THROWS_AS(lucas_mod(3, 50, WeightSpec::identity(), 5, {{}, 10}),
                  BudgetExceeded);
  CHECK_THROWS_AS(lucas_mod(3, 5, kEx6, 6), NotPrime);
  CHECK_THROWS_AS(granville_mod(3, 5, kEx6, 1), NotPrime);
}

TEST_CASE("polynomial congruence") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (const auto& f : corpus()) {
      auto row = ext_binom_row(p, f, 8 * p);
      for (std::uint64_t n = 0; n < row.size(); ++n) {
        std::uint64_t expect = n % p == 0 ? eval(f, n / p) % p : 0;
        CHECK(reduce(row[n], p) == expect);
      }
    }
}

TEST_CASE("babbage_weight") {
  auto g = babbage_weight(kTri, 2);
  CHECK(eval(g, 0) == 25);
  CHECK(eval(g, 1) == 20);
  CHECK(eval(g, 2) == 4);
  CHECK(eval(g, 3) == 1);
  CHECK(eval(g, 4) == 0);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto b = babbage_weight(WeightSpec::binomial(), p);
    CHECK(eval(b, 0) == 1);
    CHECK(eval(b, 1) == 1);
    CHECK(eval(b, 2) == 0);
    for (const auto& f : corpus()) {
      if (!support_bound(f)) continue;
      auto h = babbage_weight(f, p);
      CHECK(to_natural(eval(h, 0)) == pow_natural(to_natural(eval(f, 0)), p));
      for (std::uint64_t r = 0; r <= *support_bound(f); ++r)
        CHECK(to_natural(eval(h, r)) == ext_binom(p, r * p, f));
    }
  }
  CHECK_THROWS_AS(babbage_weight(WeightSpec::identity(), 3), DivergentBracket);
  CHECK_THROWS_AS(babbage_weight(kTri, 4), NotPrime);
}
