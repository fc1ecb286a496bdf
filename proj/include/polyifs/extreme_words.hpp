#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyifs/angle.hpp"
#include "polyifs/ifs_core.hpp"

namespace polyifs {

inline constexpr double kDefaultTieTolerance = 1e-12;
inline constexpr std::size_t kDefaultPointCap = 64;

// <z, e^{2 pi i theta}>.
double v_theta(const CircleAngle& theta, Complex z);

// Angles of c^k xi^j for j = 0..n-1, indexed by digit.
std::vector<CircleAngle> constellation(const IfsParams& params, std::int64_t k);

// A support direction plus the tie tolerance used when either angle is float.
class SupportQuery {
 public:
  // The tolerance is forced to 0 when phi and theta are both exact. Float mode
  // requires tolerance < 1/(4n) so at most one tie midpoint can match.
  SupportQuery(const IfsParams& params, CircleAngle theta,
               double tie_tolerance = kDefaultTieTolerance);

  const CircleAngle& theta() const { return theta_; }
  double tie_tolerance() const { return tie_tolerance_; }
  bool exact() const { return exact_; }

 private:
  CircleAngle theta_;
  double tie_tolerance_;
  bool exact_;
};

// The digits maximizing v_theta(c^k xi^j): one digit, or the adjacent pair
// (m, m+1 mod n) when theta is equidistant from both.
struct DigitChoices {
  std::int64_t k = 0;
  int m = 0;
  std::optional<int> second;

  bool is_pair() const { return second.has_value(); }
  std::vector<int> digits() const;
  friend bool operator==(const DigitChoices&, const DigitChoices&) = default;
};

DigitChoices digit_choices(const IfsParams& params, const SupportQuery& query, std::int64_t k);

// Truncation of the extreme word set, which is the product of the per-step
// digit sets.
struct ExtremeWordSet {
  std::vector<DigitChoices> choices;
  // q when phi = p/q is exact: choices[k + q] repeats choices[k].
  std::optional<std::int64_t> period_hint;

  std::size_t pair_count() const;
  // 2^pair_count, saturating.
  std::uint64_t cardinality() const;
  // The words of the product in lexicographic order, at most `cap` of them.
  std::vector<Word> words(std::size_t cap) const;
};

ExtremeWordSet extreme_word_set(const IfsParams& params, const SupportQuery& query, int depth);

enum class ExtremeClass { Unique, Two, CantorFace, Unresolved };
std::string to_string(ExtremeClass c);

struct ExtremePoints {
  ExtremeClass classification = ExtremeClass::Unresolved;
  ExtremeWordSet word_set;
  std::vector<Word> words;
  std::vector<Complex> points;
  std::vector<std::int64_t> tie_steps;  // steps k < depth carrying a pair
  bool truncated = false;               // more words exist than were evaluated
};

// Evaluates the extreme words truncated at `depth`. Exact phi classifies from
// one period; float phi classifies from the ties found in k < depth and falls
// back to Unresolved when more than one appears.
ExtremePoints extreme_points(const IfsParams& params, const SupportQuery& query, int depth,
                             std::size_t cap = kDefaultPointCap);

struct SupportValue {
  double value;
  double error_bar;
};

// sum_{k<depth} max_j v_theta(c^k xi^j), within tail_bound(depth) of the
// supremum of v_theta over the limit set.
SupportValue support_value(const IfsParams& params, const CircleAngle& theta, int depth);

}  // namespace polyifs
