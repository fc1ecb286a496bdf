#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace polyifs {

// Exact fraction, always in lowest terms with a positive denominator.
// Intermediate products are carried in 128 bits; a result that does not fit
// back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::int64_t floor() const;
  bool is_integer() const { return den_ == 1; }

  // "p/q"; integers print as "p/1" so the exact form stays recognizable.
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Fractional part in [0, 1).
Rational frac(const Rational& x);
double frac(double x);

// A point on the circle R/Z, stored either exactly or as a double in [0, 1).
class CircleAngle {
 public:
  CircleAngle() : value_(Rational{}) {}
  CircleAngle(const Rational& exact) : value_(frac(exact)) {}
  static CircleAngle from_double(double x) { return CircleAngle(Float{frac(x)}); }

  // "p/q" (or "-p/q") selects exact mode; anything else is parsed as a
  // decimal literal in float mode. No float-to-rational recovery.
  static CircleAngle parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  // Throws RequiresExactAngle in float mode.
  const Rational& exact() const;
  double value() const;

  std::string to_string() const;

  // Exact when both operands are exact, float otherwise.
  friend CircleAngle operator+(const CircleAngle& a, const CircleAngle& b);
  friend CircleAngle operator-(const CircleAngle& a, const CircleAngle& b);
  CircleAngle times(std::int64_t k) const;

  // Exact equality only compares exact angles with each other; mixed or
  // float pairs compare their doubles.
  friend bool operator==(const CircleAngle& a, const CircleAngle& b);

 private:
  struct Float {
    double x;
  };
  explicit CircleAngle(Float f) : value_(f.x) {}

  std::variant<Rational, double> value_;
};

// min(|a-b|, 1-|a-b|) on R/Z.
double circular_distance(double a, double b);
double circular_distance(const CircleAngle& a, const CircleAngle& b);

}  // namespace polyifs
