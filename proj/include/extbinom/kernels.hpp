#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "extbinom/natural.hpp"
#include "extbinom/weights.hpp"

// Convolution kernels behind the exact module. Each kernel has a serial
// reference and an OpenMP variant; both must produce identical output.
namespace extbinom::kernels {

enum class Exec { Serial, Parallel };

using SupportPoints = std::span<const std::pair<PartSize, Weight>>;

// out[n] = sum over (s, w) in points with s <= n of w * prev[n - s]
// (prev read as zero past its end), for n in [0, out.size()).
void next_row(std::span<const Natural> prev, SupportPoints points,
              std::span<Natural> out, Exec exec = Exec::Parallel);

// Coefficients 0..n_max of a*b.
std::vector<Natural> truncated_product(std::span<const Natural> a,
                                       std::span<const Natural> b,
                                       std::size_t n_max,
                                       Exec exec = Exec::Parallel);

// Coefficients 0..n_max of base^k by binary powering.
std::vector<Natural> truncated_power(std::span<const Natural> base,
                                     std::uint64_t k, std::size_t n_max,
                                     Exec exec = Exec::Parallel);

// Same recurrences over Z/p, p < 2^32.
void next_row_mod(std::span<const std::uint64_t> prev,
                  std::span<const std::pair<PartSize, std::uint64_t>> points,
                  std::uint64_t p, std::span<std::uint64_t> out);

}  // namespace extbinom::kernels
