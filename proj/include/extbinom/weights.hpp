#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extbinom/natural.hpp"

namespace extbinom {

// Weights and part sizes are native unsigned integers. Table values are
// capped at UINT64_MAX; anything that sums or multiplies weights goes
// through Natural.
using Weight = std::uint64_t;
using PartSize = std::uint64_t;

enum class WeightKind {
  Table,
  IndicatorSet,
  IndicatorOdd,
  Identity,
  AvoidProgression,
  Binomial,
};

/// A weight function f: N -> N. Part size s may occur in f(s) colors.
///
/// Immutable once built. The zeroed overlay forces f(s) = 0 on a finite set
/// of part sizes and always takes precedence over the family.
class WeightSpec {
 public:
  static WeightSpec table(std::map<PartSize, Weight> entries);
  static WeightSpec indicator_set(std::set<PartSize> members);
  static WeightSpec odd();
  static WeightSpec identity();
  // f(s) = 1 iff s is not in {a + m*j : j >= 0}.
  static WeightSpec avoid_progression(PartSize a, PartSize m);
  static WeightSpec binomial();

  WeightKind kind() const noexcept { return kind_; }
  const std::map<PartSize, Weight>& table_entries() const noexcept {
    return table_;
  }
  const std::set<PartSize>& members() const noexcept { return set_; }
  PartSize progression_start() const noexcept { return a_; }
  PartSize progression_step() const noexcept { return m_; }
  const std::set<PartSize>& zeroed() const noexcept { return zeroed_; }

  Weight operator()(PartSize s) const noexcept;

  // Copy of this spec with `s` added to the zeroed overlay.
  WeightSpec with_zeroed(PartSize s) const;

 private:
  WeightSpec() = default;

  WeightKind kind_ = WeightKind::Table;
  std::map<PartSize, Weight> table_;
  std::set<PartSize> set_;
  PartSize a_ = 0;
  PartSize m_ = 1;
  std::set<PartSize> zeroed_;
};

Weight eval(const WeightSpec& spec, PartSize s) noexcept;

// std::nullopt means unbounded support. Finite(0) also covers f == 0.
using SupportBound = std::optional<PartSize>;
SupportBound support_bound(const WeightSpec& spec);

// f with f(ell) forced to zero.
WeightSpec restrict_at(const WeightSpec& spec, PartSize ell);

// Sum of f(s) over all s. Throws DivergentMass on unbounded support.
Natural total_mass(const WeightSpec& spec);

// (s, f(s)) for every s <= limit with f(s) > 0, ascending in s.
std::vector<std::pair<PartSize, Weight>> support_points(const WeightSpec& spec,
                                                        PartSize limit);

// Grammar:
//   spec   := "table:" pairs | "set:" ints | "odd" | "id"
//           | "avoid:a=" int ",m=" int | "binom"
//   pairs  := int "=" int ("," int "=" int)*     (last duplicate wins)
//   ints   := int ("," int)*
// optionally followed by "|zero=" ints.
WeightSpec parse_weights(std::string_view text);
std::string format_weights(const WeightSpec& spec);

// Pointwise equality on [0, limit].
bool agree_on(const WeightSpec& lhs, const WeightSpec& rhs, PartSize limit);

}  // namespace extbinom
