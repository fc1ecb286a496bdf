#include "polyifs/angle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <system_error>

#include "polyifs/error.hpp"

namespace polyifs {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr i128 lim = std::numeric_limits<std::int64_t>::max();
  if (abs128(num) > lim || den > lim) throw std::overflow_error("rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational frac(const Rational& x) { return x - Rational(x.floor()); }

double frac(double x) {
  double f = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1.
  return f >= 1.0 ? 0.0 : f;
}

CircleAngle CircleAngle::parse(std::string_view text) {
  auto fail = [&] { return DomainError("malformed angle '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto parse_int = [&](std::string_view s) {
      std::int64_t v = 0;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw fail();
      return v;
    };
    std::int64_t p = parse_int(text.substr(0, slash));
    std::int64_t q = parse_int(text.substr(slash + 1));
    if (q == 0) throw DomainError("angle '" + std::string(text) + "' has zero denominator");
    return CircleAngle(Rational(p, q));
  }
  std::string s(text);
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw fail();
  }
  if (used != s.size() || !std::isfinite(x)) throw fail();
  return from_double(x);
}

const Rational& CircleAngle::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw RequiresExactAngle("requires exact rational angle, got float " + to_string());
}

double CircleAngle::value() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_double();
  return std::get<double>(value_);
}

std::string CircleAngle::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, ptr);
}

CircleAngle operator+(const CircleAngle& a, const CircleAngle& b) {
  if (a.is_exact() && b.is_exact()) return CircleAngle(a.exact() + b.exact());
  return CircleAngle::from_double(a.value() + b.value());
}

CircleAngle operator-(const CircleAngle& a, const CircleAngle& b) {
  if (a.is_exact() && b.is_exact()) return CircleAngle(a.exact() - b.exact());
  return CircleAngle::from_double(a.value() - b.value());
}

CircleAngle CircleAngle::times(std::int64_t k) const {
  if (is_exact()) return CircleAngle(exact() * Rational(k));
  // Absolute error grows like k ulps; fine for the k <= 1e4 scans used here.
  return from_double(static_cast<double>(k) * value());
}

bool operator==(const CircleAngle& a, const CircleAngle& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.value() == b.value();
}

double circular_distance(double a, double b) {
  double d = std::fabs(frac(a) - frac(b));
  return std::min(d, 1.0 - d);
}

double circular_distance(const CircleAngle& a, const CircleAngle& b) {
  if (a.is_exact() && b.is_exact()) {
    Rational d = frac(a.exact() - b.exact());
    Rational other = Rational(1) - d;
    return (d < other ? d : other).to_double();
  }
  return circular_distance(a.value(), b.value());
}

}  // namespace polyifs
