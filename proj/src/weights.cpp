#include "extbinom/weights.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "extbinom/errors.hpp"

namespace extbinom {

WeightSpec WeightSpec::table(std::map<PartSize, Weight> entries) {
  WeightSpec spec;
  spec.kind_ = WeightKind::Table;
  spec.table_ = std::move(entries);
  return spec;
}

WeightSpec WeightSpec::indicator_set(std::set<PartSize> members) {
  WeightSpec spec;
  spec.kind_ = WeightKind::IndicatorSet;
  spec.set_ = std::move(members);
  return spec;
}

WeightSpec WeightSpec::odd() {
  WeightSpec spec;
  spec.kind_ = WeightKind::IndicatorOdd;
  return spec;
}

WeightSpec WeightSpec::identity() {
  WeightSpec spec;
  spec.kind_ = WeightKind::Identity;
  return spec;
}

WeightSpec WeightSpec::avoid_progression(PartSize a, PartSize m) {
  if (m == 0) throw InvalidArgument("avoid: progression step m must be >= 1");
  WeightSpec spec;
  spec.kind_ = WeightKind::AvoidProgression;
  spec.a_ = a;
  spec.m_ = m;
  return spec;
}

WeightSpec WeightSpec::binomial() {
  WeightSpec spec;
  spec.kind_ = WeightKind::Binomial;
  return spec;
}

Weight WeightSpec::operator()(PartSize s) const noexcept {
  if (!zeroed_.empty() && zeroed_.count(s) != 0) return 0;
  switch (kind_) {
    case WeightKind::Table: {
      auto it = table_.find(s);
      return it == table_.end() ? 0 : it->second;
    }
    case WeightKind::IndicatorSet:
      return set_.count(s) != 0 ? 1 : 0;
    case WeightKind::IndicatorOdd:
      return s % 2 == 1 ? 1 : 0;
    case WeightKind::Identity:
      return s;
    case WeightKind::AvoidProgression:
      return (s >= a_ && (s - a_) % m_ == 0) ? 0 : 1;
    case WeightKind::Binomial:
      return s <= 1 ? 1 : 0;
  }
  return 0;
}

WeightSpec WeightSpec::with_zeroed(PartSize s) const {
  WeightSpec copy = *this;
  copy.zeroed_.insert(s);
  return copy;
}

Weight eval(const WeightSpec& spec, PartSize s) noexcept { return spec(s); }

namespace {

template <typename Keys>
SupportBound largest_live(const WeightSpec& spec, const Keys& keys) {
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    if (spec(*it) > 0) return *it;
  }
  return PartSize{0};
}

}  // namespace

SupportBound support_bound(const WeightSpec& spec) {
  switch (spec.kind()) {
    case WeightKind::Table: {
      std::vector<PartSize> keys;
      keys.reserve(spec.table_entries().size());
      for (const auto& [s, w] : spec.table_entries()) keys.push_back(s);
      return largest_live(spec, keys);
    }
    case WeightKind::IndicatorSet:
      return largest_live(spec, spec.members());
    case WeightKind::Binomial:
      return largest_live(spec, std::vector<PartSize>{0, 1});
    case WeightKind::IndicatorOdd:
    case WeightKind::Identity:
    case WeightKind::AvoidProgression:
      return std::nullopt;
  }
  return std::nullopt;
}

WeightSpec restrict_at(const WeightSpec& spec, PartSize ell) {
  return spec.with_zeroed(ell);
}

Natural total_mass(const WeightSpec& spec) {
  const SupportBound bound = support_bound(spec);
  if (!bound) throw DivergentMass("total mass of an unbounded support diverges");
  Natural mass = 0;
  for (const auto& [s, w] : support_points(spec, *bound)) mass += to_natural(w);
  return mass;
}

std::vector<std::pair<PartSize, Weight>> support_points(const WeightSpec& spec,
                                                        PartSize limit) {
  std::vector<std::pair<PartSize, Weight>> out;
  auto push = [&](PartSize s) {
    const Weight w = spec(s);
    if (w > 0) out.emplace_back(s, w);
  };
  switch (spec.kind()) {
    case WeightKind::Table:
      for (const auto& [s, w] : spec.table_entries()) {
        if (s > limit) break;
        push(s);
      }
      break;
    case WeightKind::IndicatorSet:
      for (PartSize s : spec.members()) {
        if (s > limit) break;
        push(s);
      }
      break;
    case WeightKind::Binomial:
      for (PartSize s = 0; s <= std::min<PartSize>(limit, 1); ++s) push(s);
      break;
    case WeightKind::IndicatorOdd:
    case WeightKind::Identity:
    case WeightKind::AvoidProgression:
      for (PartSize s = 0;; ++s) {
        push(s);
        if (s == limit) break;
      }
      break;
  }
  return out;
}

bool agree_on(const WeightSpec& lhs, const WeightSpec& rhs, PartSize limit) {
  for (PartSize s = 0;; ++s) {
    if (lhs(s) != rhs(s)) return false;
    if (s == limit) return true;
  }
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ == text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

  bool consume(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!consume(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::uint64_t integer() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first == last || *first < '0' || *first > '9')
      fail("expected a decimal integer");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
      fail("integer exceeds " +
           std::to_string(std::numeric_limits<std::uint64_t>::max()));
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::set<PartSize> integer_list() {
    std::set<PartSize> out;
    do {
      out.insert(integer());
    } while (consume(","));
    return out;
  }

  [[noreturn]] void fail(std::string reason) const {
    throw ParseError(pos_, std::move(reason));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::set<PartSize>& values) {
  std::string out;
  for (PartSize v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

WeightSpec parse_weights(std::string_view text) {
  Cursor in(text);
  std::optional<WeightSpec> spec;
  if (in.consume("table:")) {
    std::map<PartSize, Weight> entries;
    do {
      const PartSize s = in.integer();
      in.expect("=");
      entries[s] = in.integer();
    } while (in.consume(","));
    spec = WeightSpec::table(std::move(entries));
  } else if (in.consume("set:")) {
    spec = WeightSpec::indicator_set(in.integer_list());
  } else if (in.consume("odd")) {
    spec = WeightSpec::odd();
  } else if (in.consume("id")) {
    spec = WeightSpec::identity();
  } else if (in.consume("avoid:a=")) {
    const PartSize a = in.integer();
    in.expect(",m=");
    const std::size_t at = in.pos();
    const PartSize m = in.integer();
    if (m == 0) throw ParseError(at, "progression step m must be >= 1");
    spec = WeightSpec::avoid_progression(a, m);
  } else if (in.consume("binom")) {
    spec = WeightSpec::binomial();
  } else {
    in.fail("unknown weight family");
  }

  if (in.consume("|zero=")) {
    for (PartSize s : in.integer_list()) spec = spec->with_zeroed(s);
  }
  if (!in.done()) in.fail("unexpected trailing input");
  return *spec;
}

std::string format_weights(const WeightSpec& spec) {
  std::string out;
  switch (spec.kind()) {
    case WeightKind::Table:
      if (spec.table_entries().empty()) {
        out = "table:0=0";
        break;
      }
      out = "table:";
      for (const auto& [s, w] : spec.table_entries()) {
        if (out.back() != ':') out += ',';
        out += std::to_string(s) + "=" + std::to_string(w);
      }
      break;
    case WeightKind::IndicatorSet:
      out = spec.members().empty() ? "table:0=0" : "set:" + join(spec.members());
      break;
    case WeightKind::IndicatorOdd:
      out = "odd";
      break;
    case WeightKind::Identity:
      out = "id";
      break;
    case WeightKind::AvoidProgression:
      out = "avoid:a=" + std::to_string(spec.progression_start()) +
            ",m=" + std::to_string(spec.progression_step());
      break;
    case WeightKind::Binomial:
      out = "binom";
      break;
  }
  if (!spec.zeroed().empty()) out += "|zero=" + join(spec.zeroed());
  return out;
}

}  // namespace extbinom
