#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "extbinom/exact.hpp"
#include "extbinom/kernels.hpp"

using namespace extbinom;
using kernels::Exec;

namespace {

std::vector<Natural> random_series(std::mt19937_64& rng, std::size_t len) {
  std::vector<Natural> out(len);
  for (auto& v : out) {
    v = to_natural(rng() % 1000);
    if (rng() % 4 == 0) v = 0;
  }
  return out;
}

}  // namespace

TEST_CASE("next_row serial and parallel agree") {
  auto f = WeightSpec::table({{0, 3}, {1, 2}, {2, 1}, {7, 9}});
  auto points = support_points(f, 200);
  std::mt19937_64 rng(1);
  for (std::size_t width : {1u, 5u, 47u, 48u, 200u}) {
    auto prev = random_series(rng, width / 2 + 1);
    std::vector<Natural> a(width), b(width);
    kernels::next_row(prev, points, a, Exec::Serial);
    kernels::next_row(prev, points, b, Exec::Parallel);
    CHECK(a == b);
  }
}

TEST_CASE("next_row is one convolution step") {
  std::vector<Natural> prev{1, 2, 1};
  std::vector<std::pair<PartSize, Weight>> points{{0, 1}, {1, 1}};
  std::vector<Natural> out(5);
  kernels::next_row(prev, points, out);
  CHECK(out == std::vector<Natural>{1, 3, 3, 1, 0});
}

TEST_CASE("truncated_product serial and parallel agree") {
  std::mt19937_64 rng(2);
  for (std::size_t n_max : {0u, 3u, 60u, 300u}) {
    auto a = random_series(rng, n_max + 1);
    auto b = random_series(rng, n_max / 3 + 1);
    auto s = kernels::truncated_product(a, b, n_max, Exec::Serial);
    auto p = kernels::truncated_product(a, b, n_max, Exec::Parallel);
    CHECK(s == p);
    REQUIRE(s.size() == n_max + 1);
    Natural c0 = a[0] * b[0];
    CHECK(s[0] == c0);
  }
}

TEST_CASE("truncated_power matches repeated products") {
  std::vector<Natural> base{5, 0, 2, 1};
  std::vector<Natural> acc{1};
  for (std::uint64_t k = 0; k <= 9; ++k) {
    CHECK(kernels::truncated_power(base, k, 20, Exec::Serial) ==
          kernels::truncated_power(base, k, 20, Exec::Parallel));
    auto expect = acc;
    expect.resize(21);
    CHECK(kernels::truncated_power(base, k, 20) == expect);
    acc = kernels::truncated_product(acc, base, 20, Exec::Serial);
  }
}

TEST_CASE("next_row_mod reduces next_row") {
  auto f = WeightSpec::table({{0, 5}, {2, 2}, {3, 1}, {4, 11}});
  auto points = support_points(f, 100);
  std::vector<std::pair<PartSize, std::uint64_t>> mod_points;
  for (const auto& [s, w] : points) mod_points.emplace_back(s, w % 7);
  std::mt19937_64 rng(3);
  auto prev = random_series(rng, 60);
  std::vector<std::uint64_t> prev_mod;
  for (const auto& v : prev) prev_mod.push_back(reduce(v, 7));
  std::vector<Natural> exact(80);
  std::vector<std::uint64_t> residues(80);
  kernels::next_row(prev, points, exact);
  kernels::next_row_mod(prev_mod, mod_points, 7, residues);
  for (std::size_t i = 0; i < exact.size(); ++i)
    CHECK(reduce(exact[i], 7) == residues[i]);
}

TEST_CASE("triangle and triangle_serial agree") {
  for (auto f : {WeightSpec::table({{0, 3}, {1, 2}, {2, 1}}),
                 WeightSpec::identity(), WeightSpec::odd(),
                 WeightSpec::binomial()}) {
    auto par = triangle(f, 30, 120);
    auto ser = triangle_serial(f, 30, 120);
    for (std::uint64_t k = 0; k <= 30; ++k) {
      auto a = par.row(k);
      auto b = ser.row(k);
      CHECK(std::vector<Natural>(a.begin(), a.end()) ==
            std::vector<Natural>(b.begin(), b.end()));
    }
  }
}
