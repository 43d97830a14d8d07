#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "extbinom/errors.hpp"
#include "extbinom/exact.hpp"

using namespace extbinom;

namespace {

const WeightSpec kTri = WeightSpec::table({{0, 5}, {2, 2}, {3, 1}});
const WeightSpec kEx6 = WeightSpec::table({{0, 3}, {1, 2}, {2, 1}});

std::vector<WeightSpec> corpus() {
  return {kTri,
          kEx6,
          WeightSpec::table({{1, 1}, {2, 1}, {3, 1}, {9, 3}}),
          WeightSpec::indicator_set({1, 2}),
          WeightSpec::identity(),
          WeightSpec::binomial(),
          WeightSpec::odd(),
          WeightSpec::avoid_progression(1, 3)};
}

Natural pow_w(Weight w, std::uint64_t e) { return pow_natural(to_natural(w), e); }

}  // namespace

TEST_CASE("enumeration examples") {
  auto f = WeightSpec::table({{1, 1}, {2, 1}, {3, 1}, {9, 3}});
  CHECK(count_by_enumeration(4, 15, f) == 84);
  CHECK(count_by_enumeration(0, 0, WeightSpec::identity()) == 1);
  CHECK(count_by_enumeration(1, 3, kEx6) == 0);
}

TEST_CASE("ext_binom examples") {
  CHECK(ext_binom(13, 14, kEx6) == Natural("289159780"));
  CHECK(ext_binom(3, 6, kTri) == 23);
  for (const auto& f : corpus())
    for (std::uint64_t k = 0; k <= 5; ++k)
      CHECK(ext_binom(k, 0, f) == pow_w(eval(f, 0), k));
}

TEST_CASE("partition examples") {
  CHECK(ext_binom_by_partitions(2, 4, kTri) == 4);
  for (const auto& f : corpus())
    for (std::uint64_t x = 0; x <= 5; ++x)
      CHECK(ext_binom_by_partitions(1, x, f) == to_natural(eval(f, x)));
}

TEST_CASE("three oracles agree") {
  for (const auto& f : corpus()) {
    for (std::uint64_t k = 0; k <= 6; ++k) {
      auto row = ext_binom_row(k, f, 10);
      for (std::uint64_t n = 0; n <= 10; ++n) {
        CAPTURE(format_weights(f));
        CAPTURE(k);
        CAPTURE(n);
        auto a = count_by_enumeration(k, n, f);
        CHECK(a == ext_binom(k, n, f));
        CHECK(a == ext_binom_by_partitions(k, n, f));
        CHECK(a == row[n]);
      }
    }
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(count_by_enumeration(12, 40, WeightSpec::identity(),
                                       Budget{1000}),
                  BudgetExceeded);
  CHECK_THROWS_AS(ext_binom_by_partitions(30, 60, WeightSpec::identity(),
                                          Budget{10}),
                  BudgetExceeded);
}

TEST_CASE("Vandermonde") {
  for (const auto& f : corpus()) {
    auto t = triangle(f, 8, 12);
    for (std::uint64_t k = 0; k <= 8; ++k) {
      for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::uint64_t k1 = 0; k1 <= k; ++k1) {
          Natural two = 0;
          for (std::uint64_t m = 0; m <= n; ++m)
            two += t.at(k1, m) * t.at(k - k1, n - m);
          CHECK(two == t.at(k, n));
          for (std::uint64_t k2 = 0; k1 + k2 <= k; ++k2) {
            std::uint64_t k3 = k - k1 - k2;
            Natural three = 0;
            for (std::uint64_t m1 = 0; m1 <= n; ++m1)
              for (std::uint64_t m2 = 0; m1 + m2 <= n; ++m2)
                three += t.at(k1, m1) * t.at(k2, m2) * t.at(k3, n - m1 - m2);
            CHECK(three == t.at(k, n));
          }
        }
      }
    }
  }
}

TEST_CASE("absorption") {
  for (const auto& f : corpus()) {
    auto t = triangle(f, 8, 12);
    for (std::uint64_t k = 1; k <= 8; ++k)
      for (std::uint64_t i = 1; i <= k; ++i)
        for (std::uint64_t n = 1; n <= 12; ++n) {
          Natural rhs = 0;
          for (std::uint64_t s = 0; s <= n; ++s)
            rhs += to_natural(s) * t.at(i, s) * t.at(k - i, n - s);
          Natural lhs = to_natural(i) * to_natural(n) * t.at(k, n);
          CHECK(lhs == to_natural(k) * rhs);
        }
  }
}

TEST_CASE("restriction recurrence") {
  for (const auto& f : corpus()) {
    for (const auto& [ell, w] : support_points(f, 10)) {
      auto g = restrict_at(f, ell);
      for (std::uint64_t k = 0; k <= 6; ++k)
        for (std::uint64_t n = 0; n <= 10; ++n) {
          Natural sum = 0;
          for (std::uint64_t i = 0; i <= k && ell * i <= n; ++i)
            sum += pow_w(w, i) * ordinary_binomial(k, i) *
                   ext_binom(k - i, n - ell * i, g);
          CHECK(sum == ext_binom(k, n, f));
        }
    }
  }
}

TEST_CASE("base cases") {
  for (const auto& f : corpus()) {
    Natural f0 = to_natural(eval(f, 0));
    Natural f1 = to_natural(eval(f, 1));
    for (std::uint64_t k = 0; k <= 7; ++k) {
      CHECK(ext_binom(k, 0, f) == pow_w(eval(f, 0), k));
      Natural one = k == 0 ? Natural(0)
                           : Natural(to_natural(k) * f1 *
                                     pow_natural(f0, k - 1));
      CHECK(ext_binom(k, 1, f) == one);
    }
    for (std::uint64_t x = 0; x <= 12; ++x) {
      CHECK(ext_binom(1, x, f) == to_natural(eval(f, x)));
      CHECK(ext_binom(0, x, f) == (x == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("zero past k*S") {
  for (const auto& f : corpus()) {
    auto bound = support_bound(f);
    if (!bound) continue;
    for (std::uint64_t k = 0; k <= 6; ++k)
      for (std::uint64_t n = k * *bound + 1; n <= k * *bound + 10; ++n)
        CHECK(ext_binom(k, n, f) == 0);
  }
  auto zero = WeightSpec::table({});
  CHECK(ext_binom(0, 0, zero) == 1);
  CHECK(ext_binom(3, 0, zero) == 0);
  CHECK(ext_binom(3, 2, zero) == 0);
}

TEST_CASE("triangle") {
  auto t = triangle(kTri, 3, 12);
  auto expect_row = [&](std::uint64_t k, std::vector<int> values) {
    for (std::uint64_t n = 0; n <= 12; ++n) {
      int v = n < values.size() ? values[n] : 0;
      CHECK(t.at(k, n) == v);
    }
  };
  expect_row(0, {1});
  expect_row(1, {5, 0, 2, 1});
  expect_row(2, {25, 0, 20, 10, 4, 4, 1});
  expect_row(3, {125, 0, 150, 75, 60, 60, 23, 12, 6, 1});
  CHECK(t.row(3).size() == 10);
  CHECK(t.at(7, 0) == 0);

  auto pascal = triangle(WeightSpec::binomial(), 4, 6);
  for (std::uint64_t k = 0; k <= 4; ++k)
    for (std::uint64_t n = 0; n <= 6; ++n)
      CHECK(pascal.at(k, n) == ordinary_binomial(k, n));

  auto id = triangle(WeightSpec::identity(), 6, 20);
  for (std::uint64_t k = 1; k <= 6; ++k)
    for (std::uint64_t n = 0; n <= 20; ++n) {
      Natural rec = 0;
      for (std::uint64_t mu = 0; mu <= n; ++mu)
        rec += to_natural(mu) * id.at(k - 1, n - mu);
      CHECK(rec == id.at(k, n));
    }
}

TEST_CASE("c_sequence") {
  auto f = WeightSpec::table({{1, 1}, {2, 3}, {4, 2}});
  auto c = c_sequence(f, 20);
  CHECK(c.size() == 21);
  CHECK(c[0] == 1);
  CHECK(c[5] == 44);
  CHECK(c[10] == 3693);
  CHECK(c[15] == 290375);
  CHECK(c[20] == 22985976);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    Natural rec = 0;
    for (std::uint64_t m = 1; m <= n; ++m)
      rec += to_natural(eval(f, m)) * c[n - m];
    CHECK(rec == c[n]);
  }
  auto fib = c_sequence(WeightSpec::indicator_set({1, 2}), 30);
  Natural a = 1, b = 1;
  for (std::uint64_t n = 0; n <= 30; ++n) {
    CHECK(fib[n] == a);
    Natural next = a + b;
    a = b;
    b = next;
  }
  CHECK(c_sequence(WeightSpec::identity(), 2)[2] == 3);
  CHECK_THROWS_AS(c_sequence(WeightSpec::binomial(), 5), InfiniteCount);
}

TEST_CASE("bracket") {
  for (std::uint64_t k = 0; k <= 4; ++k)
    CHECK(bracket(k, 0, 1, kTri) == pow_natural(Natural(8), k));
  CHECK(bracket(1, 0, 2, kTri) == 7);
  CHECK(bracket(2, 1, 3, kTri) == 4);
  CHECK_THROWS_AS(bracket(2, 0, 0, kTri), InvalidArgument);
  CHECK_THROWS_AS(bracket(2, 3, 3, kTri), InvalidArgument);
  CHECK_THROWS_AS(bracket(2, 0, 3, WeightSpec::identity()), DivergentBracket);

  for (const auto& f : corpus()) {
    if (!support_bound(f)) continue;
    auto points = support_points(f, *support_bound(f));
    for (std::uint64_t m = 1; m <= 5; ++m)
      for (std::uint64_t k = 1; k <= 6; ++k)
        for (std::uint64_t r = 0; r < m; ++r) {
          Natural rec = 0;
          for (const auto& [s, w] : points)
            rec += to_natural(w) *
                   bracket(k - 1, (r + m - s % m) % m, m, f);
          CHECK(rec == bracket(k, r, m, f));
        }
  }
}

TEST_CASE("row paths agree with triangle") {
  for (auto f : {WeightSpec::identity(), WeightSpec::odd(), kEx6}) {
    auto t = triangle(f, 40, 200);
    for (std::uint64_t k : {1u, 2u, 7u, 25u, 40u}) {
      auto row = ext_binom_row(k, f, 200);
      for (std::uint64_t n = 0; n <= 200; ++n) CHECK(row[n] == t.at(k, n));
    }
  }
}
