#pragma once

// Exact index values in (1/N)Z. Cauchy indices of real fractions live in
// (1/2)Z, winding indices of piecewise polynomial loops in (1/4)Z.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace cauchy {

template <int Denominator>
class IndexValue {
  static_assert(Denominator > 0);

 public:
  constexpr IndexValue() = default;

  /// The value units / Denominator.
  static constexpr IndexValue from_units(std::int64_t units) {
    IndexValue v;
    v.units_ = units;
    return v;
  }
  static constexpr IndexValue from_integer(std::int64_t value) {
    return from_units(value * Denominator);
  }

  /// Embeds a coarser index value, e.g. HalfInt into QuarterInt.
  template <int Other>
    requires(Other < Denominator && Denominator % Other == 0)
  constexpr IndexValue(IndexValue<Other> other)  // NOLINT(google-explicit-constructor)
      : units_(other.units() * (Denominator / Other)) {}

  constexpr std::int64_t units() const { return units_; }
  constexpr bool is_integer() const { return units_ % Denominator == 0; }
  constexpr bool is_zero() const { return units_ == 0; }
  constexpr std::int64_t integer_part() const { return units_ / Denominator; }
  double to_double() const { return static_cast<double>(units_) / Denominator; }

  /// Reduced fraction text: "2", "-1/2", "3/4".
  std::string to_string() const {
    const std::int64_t g = std::gcd(units_ < 0 ? -units_ : units_, std::int64_t{Denominator});
    const std::int64_t num = units_ / (g == 0 ? 1 : g);
    const std::int64_t den = Denominator / (g == 0 ? Denominator : g);
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  constexpr IndexValue& operator+=(IndexValue other) {
    units_ += other.units_;
    return *this;
  }
  constexpr IndexValue& operator-=(IndexValue other) {
    units_ -= other.units_;
    return *this;
  }
  friend constexpr IndexValue operator+(IndexValue a, IndexValue b) { return a += b; }
  friend constexpr IndexValue operator-(IndexValue a, IndexValue b) { return a -= b; }
  friend constexpr IndexValue operator-(IndexValue a) { return from_units(-a.units_); }
  friend constexpr IndexValue operator*(std::int64_t k, IndexValue a) {
    return from_units(k * a.units_);
  }
  friend constexpr bool operator==(IndexValue, IndexValue) = default;
  friend constexpr auto operator<=>(IndexValue, IndexValue) = default;

  friend std::ostream& operator<<(std::ostream& out, IndexValue v) { return out << v.to_string(); }

 private:
  std::int64_t units_ = 0;
};

using HalfInt = IndexValue<2>;
using QuarterInt = IndexValue<4>;

/// Halves a HalfInt exactly, as in ind = (1/2) Ind.
constexpr QuarterInt half_of(HalfInt value) { return QuarterInt::from_units(value.units()); }

}  // namespace cauchy
