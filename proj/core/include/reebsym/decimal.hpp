#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace reebsym {

/// Exact decimal number used for scalar field values.
///
/// Field values are compared exactly: two vertices lie on the same level iff
/// their decimals are numerically equal. A value parsed from text remembers
/// its literal so reports can echo the input verbatim. Arithmetic is limited
/// to what refinements need (sums and halving), all of it exact.
class Decimal {
 public:
  Decimal() = default;

  static Decimal parse(std::string_view text);
  static std::optional<Decimal> try_parse(std::string_view text);
  static Decimal from_int(long long value);
  /// mantissa * 10^-scale
  static Decimal from_scaled(long long mantissa, int scale);

  /// The input literal if this value was parsed, otherwise a canonical form.
  std::string str() const;
  std::string canonical() const;
  double to_double() const;
  int sign() const;

  Decimal operator+(const Decimal& other) const;
  Decimal operator-(const Decimal& other) const;
  Decimal operator-() const;
  Decimal half() const;

  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);
  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.mantissa_ == b.mantissa_ && a.scale_ == b.scale_;
  }

 private:
  Decimal(__int128 mantissa, int scale);
  void normalize();

  // value = mantissa_ * 10^-scale_, with no trailing zero digits when scale_ > 0
  __int128 mantissa_ = 0;
  int scale_ = 0;
  std::string literal_;
};

Decimal midpoint(const Decimal& a, const Decimal& b);

}  // namespace reebsym
