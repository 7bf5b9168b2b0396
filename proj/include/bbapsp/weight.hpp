#pragma once

#include <cassert>
#include <cmath>
#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace bbapsp {

// Arc or path length. Finite values are stored as doubles; +infinity is a
// distinct value (never a large finite stand-in) and absorbs addition.
// Negative finite values only occur on inputs to the DAG pipeline.
class Weight {
 public:
  constexpr Weight() noexcept = default;
  constexpr explicit Weight(double value) noexcept : value_(value) {
    assert(!std::isnan(value) && value != -std::numeric_limits<double>::infinity());
  }

  static constexpr Weight infinity() noexcept {
    return Weight(std::numeric_limits<double>::infinity());
  }
  static constexpr Weight zero() noexcept { return Weight(); }

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_finite() const noexcept {
    return value_ < std::numeric_limits<double>::infinity();
  }
  bool is_integral() const noexcept {
    return is_finite() && std::trunc(value_) == value_;
  }

  friend constexpr Weight operator+(Weight a, Weight b) noexcept {
    return Weight(a.value_ + b.value_);
  }
  // Only defined for finite `b`; infinity minus anything finite stays infinite.
  friend constexpr Weight operator-(Weight a, Weight b) noexcept {
    assert(b.is_finite());
    return Weight(a.value_ - b.value_);
  }
  constexpr Weight& operator+=(Weight other) noexcept {
    value_ += other.value_;
    return *this;
  }

  friend constexpr bool operator==(Weight, Weight) noexcept = default;
  friend constexpr std::partial_ordering operator<=>(Weight, Weight) noexcept = default;

 private:
  double value_ = 0.0;
};

// Shortest round-trip decimal, or "inf".
std::string to_string(Weight w);

// Accepts decimal literals and "inf"; rejects NaN, -inf and trailing junk.
std::optional<Weight> parse_weight(std::string_view text);

// Exact comparison when both values are integral, otherwise relative
// tolerance 1e-9 (with a unit floor so values near zero still compare).
bool weights_match(Weight a, Weight b) noexcept;

}  // namespace bbapsp
