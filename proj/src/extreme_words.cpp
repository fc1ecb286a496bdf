#include "polyifs/extreme_words.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polyifs/error.hpp"

namespace polyifs {

double v_theta(const CircleAngle& theta, Complex z) {
  const double a = 2 * std::numbers::pi * theta.value();
  return z.real() * std::cos(a) + z.imag() * std::sin(a);
}

std::vector<CircleAngle> constellation(const IfsParams& params, std::int64_t k) {
  if (k < 0) throw DomainError("step index must be non-negative");
  std::vector<CircleAngle> out;
  out.reserve(params.n());
  for (int j = 0; j < params.n(); ++j) out.push_back(params.term_angle(k, j));
  return out;
}

SupportQuery::SupportQuery(const IfsParams& params, CircleAngle theta, double tie_tolerance)
    : theta_(std::move(theta)), tie_tolerance_(tie_tolerance) {
  exact_ = params.phi().is_exact() && theta_.is_exact();
  if (exact_) {
    tie_tolerance_ = 0.0;
    return;
  }
  if (!(tie_tolerance_ >= 0.0)) throw DomainError("tie tolerance must be non-negative");
  if (tie_tolerance_ >= 1.0 / (4.0 * params.n())) {
    throw DomainError("tie tolerance must be below 1/(4n) = " +
                      std::to_string(1.0 / (4.0 * params.n())));
  }
}

std::vector<int> DigitChoices::digits() const {
  if (second) return {m, *second};
  return {m};
}

namespace {

int mod_n(std::int64_t x, int n) { return static_cast<int>(((x % n) + n) % n); }

DigitChoices exact_choices(const IfsParams& params, const Rational& theta, std::int64_t k) {
  const int n = params.n();
  // x is theta measured from the digit-0 direction of constellation k.
  const Rational x = frac(theta - params.phi().exact() * Rational(k));
  const Rational scaled = x * Rational(n);
  const Rational tie = scaled - Rational(1, 2);
  if (tie.is_integer()) {
    const int m = mod_n(tie.num(), n);
    return {k, m, (m + 1) % n};
  }
  return {k, mod_n((scaled + Rational(1, 2)).floor(), n), std::nullopt};
}

DigitChoices float_choices(const IfsParams& params, double theta, double tol, std::int64_t k) {
  const int n = params.n();
  const double x = frac(theta - params.term_angle(k, 0).value());
  int matches = 0;
  int tie_m = -1;
  for (int m = 0; m < n; ++m) {
    if (circular_distance(x, (m + 0.5) / n) <= tol) {
      ++matches;
      tie_m = m;
    }
  }
  if (matches > 1) {
    throw AmbiguousTie("theta " + std::to_string(theta) + " at step " + std::to_string(k) +
                       " is within tolerance of several tie midpoints");
  }
  if (matches == 1) return {k, tie_m, (tie_m + 1) % n};
  return {k, mod_n(static_cast<std::int64_t>(std::floor(x * n + 0.5)), n), std::nullopt};
}

std::optional<std::int64_t> choice_period(const IfsParams& params) {
  if (params.phi().is_exact()) return params.phi().exact().den();
  return std::nullopt;
}

}  // namespace

DigitChoices digit_choices(const IfsParams& params, const SupportQuery& query, std::int64_t k) {
  if (k < 0) throw DomainError("step index must be non-negative");
  if (query.exact()) return exact_choices(params, query.theta().exact(), k);
  return float_choices(params, query.theta().value(), query.tie_tolerance(), k);
}

std::size_t ExtremeWordSet::pair_count() const {
  return static_cast<std::size_t>(
      std::count_if(choices.begin(), choices.end(), [](const auto& c) { return c.is_pair(); }));
}

std::uint64_t ExtremeWordSet::cardinality() const {
  const std::size_t pairs = pair_count();
  if (pairs >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << pairs;
}

std::vector<Word> ExtremeWordSet::words(std::size_t cap) const {
  std::vector<std::size_t> pair_pos;
  for (std::size_t k = 0; k < choices.size(); ++k)
    if (choices[k].is_pair()) pair_pos.push_back(k);

  const std::uint64_t total = cardinality();
  const std::uint64_t count = std::min<std::uint64_t>(total, cap);
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<int> digits(choices.size());
    for (std::size_t k = 0; k < choices.size(); ++k) digits[k] = choices[k].m;
    // The earliest pair is the most significant bit.
    for (std::size_t b = 0; b < pair_pos.size() && b < 64; ++b) {
      const std::size_t shift = pair_pos.size() - 1 - b;
      if (shift < 64 && ((idx >> shift) & 1u)) digits[pair_pos[b]] = *choices[pair_pos[b]].second;
    }
    out.emplace_back(std::move(digits));
  }
  return out;
}

ExtremeWordSet extreme_word_set(const IfsParams& params, const SupportQuery& query, int depth) {
  if (depth < 1) throw DomainError("depth must be at least 1");
  ExtremeWordSet set;
  set.period_hint = choice_period(params);
  set.choices.reserve(depth);
  const std::int64_t computed =
      set.period_hint ? std::min<std::int64_t>(*set.period_hint, depth) : depth;
  for (std::int64_t k = 0; k < computed; ++k) set.choices.push_back(digit_choices(params, query, k));
  for (std::int64_t k = computed; k < depth; ++k) {
    DigitChoices c = set.choices[k - *set.period_hint];
    c.k = k;
    set.choices.push_back(c);
  }
  return set;
}

std::string to_string(ExtremeClass c) {
  switch (c) {
    case ExtremeClass::Unique:
      return "unique";
    case ExtremeClass::Two:
      return "two";
    case ExtremeClass::CantorFace:
      return "cantor_face";
    case ExtremeClass::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

ExtremePoints extreme_points(const IfsParams& params, const SupportQuery& query, int depth,
                             std::size_t cap) {
  ExtremePoints out;
  out.word_set = extreme_word_set(params, query, depth);
  for (const auto& c : out.word_set.choices)
    if (c.is_pair()) out.tie_steps.push_back(c.k);

  if (out.word_set.period_hint) {
    // A tie anywhere in one full period recurs forever.
    bool any_tie = false;
    for (std::int64_t k = 0; k < *out.word_set.period_hint && !any_tie; ++k) {
      any_tie = k < depth ? out.word_set.choices[k].is_pair() : digit_choices(params, query, k).is_pair();
    }
    out.classification = any_tie ? ExtremeClass::CantorFace : ExtremeClass::Unique;
  } else if (out.tie_steps.empty()) {
    out.classification = ExtremeClass::Unique;
  } else if (out.tie_steps.size() == 1) {
    out.classification = ExtremeClass::Two;
  } else {
    out.classification = ExtremeClass::Unresolved;
  }

  out.truncated = out.word_set.cardinality() > cap;
  if (out.truncated && !out.word_set.period_hint) out.classification = ExtremeClass::Unresolved;
  out.words = out.word_set.words(cap);
  out.points.reserve(out.words.size());
  for (const auto& w : out.words) out.points.push_back(evaluate(params, w));
  return out;
}

SupportValue support_value(const IfsParams& params, const CircleAngle& theta, int depth) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  double sum = 0.0;
  for (int k = 0; k < depth; ++k) {
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < params.n(); ++j) best = std::max(best, v_theta(theta, params.term(k, j)));
    sum += best;
  }
  return {sum, tail_bound(params, depth)};
}

}  // namespace polyifs
