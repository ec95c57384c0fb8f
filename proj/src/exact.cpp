#include "anzai/exact.hpp"

#include <cmath>
#include <numeric>

#include "anzai/error.hpp"

namespace anzai {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorTag::kInvalidArgument, "rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
  if (den == 0) throw Error(ErrorTag::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(checked(num), checked(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorTag::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorTag::kInvalidArgument, "division by zero rational");
  return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::optional<double> named_irrational_value(const std::string& name) {
  if (name == "golden") return (std::sqrt(5.0) - 1.0) / 2.0;
  if (name == "sqrt2") return std::sqrt(2.0);
  if (name == "sqrt3") return std::sqrt(3.0);
  if (name == "sqrt5") return std::sqrt(5.0);
  return std::nullopt;
}

double ExactReal::value() const {
  double v = rational.to_double();
  if (!irrational_coeff.is_zero()) {
    const auto w = named_irrational_value(irrational);
    if (!w) throw Error(ErrorTag::kInvalidArgument, "unknown irrational '" + irrational + "'");
    v += irrational_coeff.to_double() * *w;
  }
  return v;
}

ExactReal ExactReal::scaled(std::int64_t n) const {
  return ExactReal{rational * Rational(n), irrational_coeff * Rational(n), irrational};
}

}  // namespace anzai
