#include "reebsym/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

constexpr int kMaxDigits = 30;
constexpr int kMaxScale = 36;

__int128 pow10(int exponent) {
  __int128 result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

// Rescales a mantissa from one scale to a larger one.
__int128 widen(__int128 mantissa, int from, int to) {
  const int diff = to - from;
  if (diff > kMaxScale) throw Error(ErrorCode::InvalidInput, "decimal precision exceeded");
  const __int128 factor = pow10(diff);
  const __int128 limit = pow10(37) / factor;
  if (abs128(mantissa) > limit) throw Error(ErrorCode::InvalidInput, "decimal magnitude exceeded");
  return mantissa * factor;
}

std::string digits_of(__int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Decimal::Decimal(__int128 mantissa, int scale) : mantissa_(mantissa), scale_(scale) { normalize(); }

void Decimal::normalize() {
  if (mantissa_ == 0) {
    scale_ = 0;
    return;
  }
  while (scale_ > 0 && mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    --scale_;
  }
  if (scale_ > kMaxScale) throw Error(ErrorCode::InvalidInput, "decimal precision exceeded");
}

std::optional<Decimal> Decimal::try_parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  __int128 mantissa = 0;
  int digits = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      any_digit = true;
      if (mantissa != 0 || ch != '0') ++digits;
      if (digits > kMaxDigits) return std::nullopt;
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_point) ++scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return std::nullopt;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return std::nullopt;
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return std::nullopt;
    int exponent = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 1000) return std::nullopt;
    }
    scale += exp_negative ? exponent : -exponent;
  }
  if (scale < 0) {
    if (digits - scale > kMaxDigits + 6) return std::nullopt;
    mantissa *= pow10(-scale);
    scale = 0;
  }
  if (scale > kMaxScale + kMaxDigits) return std::nullopt;
  while (scale > 0 && mantissa % 10 == 0 && mantissa != 0) {
    mantissa /= 10;
    --scale;
  }
  if (scale > kMaxScale) return std::nullopt;
  Decimal d(negative ? -mantissa : mantissa, mantissa == 0 ? 0 : scale);
  d.literal_ = std::string(text);
  return d;
}

Decimal Decimal::parse(std::string_view text) {
  auto d = try_parse(text);
  if (!d) throw Error(ErrorCode::ParseError, "not a decimal literal: '" + std::string(text) + "'");
  return *d;
}

Decimal Decimal::from_int(long long value) { return Decimal(static_cast<__int128>(value), 0); }

Decimal Decimal::from_scaled(long long mantissa, int scale) {
  if (scale < 0 || scale > kMaxScale) throw Error(ErrorCode::InvalidInput, "decimal scale out of range");
  return Decimal(static_cast<__int128>(mantissa), scale);
}

std::string Decimal::canonical() const {
  std::string digits = digits_of(abs128(mantissa_));
  std::string out = mantissa_ < 0 ? "-" : "";
  if (scale_ == 0) return out + digits;
  if (static_cast<int>(digits.size()) <= scale_)
    digits.insert(0, static_cast<std::size_t>(scale_ - static_cast<int>(digits.size()) + 1), '0');
  const std::size_t point = digits.size() - static_cast<std::size_t>(scale_);
  return out + digits.substr(0, point) + "." + digits.substr(point);
}

std::string Decimal::str() const { return literal_.empty() ? canonical() : literal_; }

double Decimal::to_double() const { return std::stod(canonical()); }

int Decimal::sign() const { return mantissa_ > 0 ? 1 : (mantissa_ < 0 ? -1 : 0); }

Decimal Decimal::operator+(const Decimal& other) const {
  const int scale = std::max(scale_, other.scale_);
  return Decimal(widen(mantissa_, scale_, scale) + widen(other.mantissa_, other.scale_, scale), scale);
}

Decimal Decimal::operator-() const { return Decimal(-mantissa_, scale_); }

Decimal Decimal::operator-(const Decimal& other) const { return *this + (-other); }

Decimal Decimal::half() const { return Decimal(widen(mantissa_, 0, 1) / 2, scale_ + 1); }

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  const int scale = std::max(a.scale_, b.scale_);
  const __int128 lhs = widen(a.mantissa_, a.scale_, scale);
  const __int128 rhs = widen(b.mantissa_, b.scale_, scale);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Decimal midpoint(const Decimal& a, const Decimal& b) { return (a + b).half(); }

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NoSuchVertex: return "NoSuchVertex";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::ConditionCViolated: return "ConditionCViolated";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::OrbitMismatch: return "OrbitMismatch";
    case ErrorCode::TwistUnrealizable: return "TwistUnrealizable";
  }
  return "Unknown";
}

}  // namespace reebsym
