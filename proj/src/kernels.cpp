#include "extbinom/kernels.hpp"

#include <algorithm>

namespace extbinom::kernels {

namespace {

// Below this many output cells the thread fork costs more than it saves.
constexpr std::size_t kParallelThreshold = 48;

inline void row_cell(std::span<const Natural> prev, SupportPoints points,
                     std::size_t n, Natural& cell) {
  cell = 0;
  for (const auto& [s, w] : points) {
    if (s > n) break;
    const std::size_t src = n - s;
    if (src >= prev.size()) continue;
    if (sgn(prev[src]) == 0) continue;
    mpz_addmul_ui(cell.get_mpz_t(), prev[src].get_mpz_t(), w);
  }
}

inline void product_cell(std::span<const Natural> a, std::span<const Natural> b,
                         std::size_t n, Natural& cell) {
  cell = 0;
  const std::size_t lo = n >= b.size() ? n - b.size() + 1 : 0;
  const std::size_t hi = std::min(n, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (sgn(a[i]) == 0 || sgn(b[n - i]) == 0) continue;
    mpz_addmul(cell.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
  }
}

}  // namespace

void next_row(std::span<const Natural> prev, SupportPoints points,
              std::span<Natural> out, Exec exec) {
  const std::size_t width = out.size();
  if (exec == Exec::Serial || width < kParallelThreshold) {
    for (std::size_t n = 0; n < width; ++n) row_cell(prev, points, n, out[n]);
    return;
  }
  // Cell cost grows with n, so hand out small chunks.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t n = 0; n < width; ++n) row_cell(prev, points, n, out[n]);
}

std::vector<Natural> truncated_product(std::span<const Natural> a,
                                       std::span<const Natural> b,
                                       std::size_t n_max, Exec exec) {
  if (a.empty() || b.empty()) return std::vector<Natural>(n_max + 1);
  const std::size_t width =
      std::min(n_max, (a.size() - 1) + (b.size() - 1)) + 1;
  std::vector<Natural> out(width);
  if (exec == Exec::Serial || width < kParallelThreshold) {
    for (std::size_t n = 0; n < width; ++n) product_cell(a, b, n, out[n]);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t n = 0; n < width; ++n) product_cell(a, b, n, out[n]);
  }
  out.resize(n_max + 1);
  return out;
}

std::vector<Natural> truncated_power(std::span<const Natural> base,
                                     std::uint64_t k, std::size_t n_max,
                                     Exec exec) {
  std::vector<Natural> result(1, Natural(1));
  std::vector<Natural> square(base.begin(),
                              base.begin() + std::min(base.size(), n_max + 1));
  while (k > 0) {
    if (k & 1) result = truncated_product(result, square, n_max, exec);
    k >>= 1;
    if (k > 0) square = truncated_product(square, square, n_max, exec);
  }
  result.resize(n_max + 1);
  return result;
}

void next_row_mod(std::span<const std::uint64_t> prev,
                  std::span<const std::pair<PartSize, std::uint64_t>> points,
                  std::uint64_t p, std::span<std::uint64_t> out) {
  for (std::size_t n = 0; n < out.size(); ++n) {
    std::uint64_t acc = 0;
    for (const auto& [s, w] : points) {
      if (s > n) break;
      const std::size_t src = n - s;
      if (src >= prev.size()) continue;
      acc = (acc + w * prev[src]) % p;
    }
    out[n] = acc;
  }
}

}  // namespace extbinom::kernels
