#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace anzai {

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT: implicit from integers is intended

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Numeric value of a named irrational constant, or nullopt for an unknown name.
/// Known names: "golden" ((sqrt5 - 1)/2), "sqrt2", "sqrt3", "sqrt5".
std::optional<double> named_irrational_value(const std::string& name);

/// A real number of the form r + s * w where w is a named irrational.
/// Arithmetic membership questions ("is this in Z + alpha Z") are answered on this
/// representation; the double value is only used for dynamics.
struct ExactReal {
  Rational rational;
  Rational irrational_coeff;
  std::string irrational;  // empty when irrational_coeff == 0

  double value() const;
  ExactReal scaled(std::int64_t n) const;
};

}  // namespace anzai
