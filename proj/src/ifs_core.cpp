#include "polyifs/ifs_core.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "polyifs/error.hpp"

namespace polyifs {

IfsParams::IfsParams(int n, double r, CircleAngle phi) : n_(n), r_(r), phi_(std::move(phi)) {
  if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
  if (!(r > 0.0 && r < 1.0)) throw DomainError("r must lie in (0, 1), got " + std::to_string(r));
}

Complex IfsParams::c() const { return std::polar(r_, 2 * std::numbers::pi * phi_.value()); }

Complex IfsParams::root(int j) const {
  j = ((j % n_) + n_) % n_;
  return std::polar(1.0, 2 * std::numbers::pi * j / n_);
}

CircleAngle IfsParams::term_angle(std::int64_t k, int j) const {
  if (phi_.is_exact()) return CircleAngle(phi_.exact() * Rational(k) + Rational(j, n_));
  return CircleAngle::from_double(frac(static_cast<double>(k) * phi_.value()) +
                                  static_cast<double>(j) / n_);
}

Complex IfsParams::term(std::int64_t k, int j) const {
  return std::polar(std::pow(r_, static_cast<double>(k)),
                    2 * std::numbers::pi * term_angle(k, j).value());
}

void Word::validate(int n) const {
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (digits_[k] < 0 || digits_[k] >= n) {
      throw InvalidWord("digit " + std::to_string(digits_[k]) + " at position " +
                        std::to_string(k) + " is outside [0, " + std::to_string(n) + ")");
    }
  }
}

Word Word::rotated(int shift, int n) const {
  std::vector<int> out(digits_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (((digits_[k] + shift) % n) + n) % n;
  return Word(std::move(out));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<int> out(a.digits_);
  out.insert(out.end(), b.digits_.begin(), b.digits_.end());
  return Word(std::move(out));
}

Word word_at(int n, int depth, std::uint64_t index) {
  std::vector<int> digits(depth);
  for (int k = depth - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(index % n);
    index /= n;
  }
  return Word(std::move(digits));
}

Complex evaluate(const IfsParams& params, const Word& word) {
  word.validate(params.n());
  Complex sum = 0;
  for (std::size_t k = 0; k < word.size(); ++k) sum += params.term(static_cast<std::int64_t>(k), word[k]);
  return sum;
}

Complex fixed_point(const IfsParams& params, int digit) {
  if (digit < 0 || digit >= params.n()) {
    throw InvalidWord("digit " + std::to_string(digit) + " is outside [0, " +
                      std::to_string(params.n()) + ")");
  }
  return params.root(digit) / (1.0 - params.c());
}

double tail_bound(const IfsParams& params, int depth) {
  return std::pow(params.r(), depth) / (1.0 - params.r());
}

int depth_for_tolerance(const IfsParams& params, double eps) {
  int m = 0;
  while (tail_bound(params, m) >= eps) ++m;
  return m;
}

std::uint64_t cloud_size(int n, int depth) {
  std::uint64_t count = 1;
  for (int k = 0; k < depth; ++k) {
    if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= static_cast<std::uint64_t>(n);
  }
  return count;
}

namespace {

// Writes every completion of a prefix (summing to `partial` through level k)
// into out[0 .. n^(depth-k)).
void fill_subtree(const std::vector<std::vector<Complex>>& terms, int k, Complex partial,
                  Complex* out) {
  const int depth = static_cast<int>(terms.size());
  if (k == depth) {
    *out = partial;
    return;
  }
  const auto& level = terms[k];
  const int n = static_cast<int>(level.size());
  std::uint64_t stride = 1;
  for (int i = k + 1; i < depth; ++i) stride *= n;
  for (int j = 0; j < n; ++j) fill_subtree(terms, k + 1, partial + level[j], out + j * stride);
}

}  // namespace

PointCloud enumerate_cloud(const IfsParams& params, int depth, std::uint64_t budget) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  const int n = params.n();
  const std::uint64_t count = cloud_size(n, depth);
  if (count > budget) {
    throw BudgetExceeded("depth " + std::to_string(depth) + " needs " + std::to_string(n) + "^" +
                             std::to_string(depth) + " = " +
                             (count == std::numeric_limits<std::uint64_t>::max()
                                  ? std::string("more than 2^64")
                                  : std::to_string(count)) +
                             " points, budget is " + std::to_string(budget),
                         count);
  }

  std::vector<std::vector<Complex>> terms(depth, std::vector<Complex>(n));
  for (int k = 0; k < depth; ++k)
    for (int j = 0; j < n; ++j) terms[k][j] = params.term(k, j);

  PointCloud cloud{params, depth, tail_bound(params, depth), std::vector<Complex>(count)};
  if (depth == 0) {
    cloud.points[0] = 0;
    return cloud;
  }

  const std::uint64_t stride = count / n;
  if (count < (1u << 16)) {
    fill_subtree(terms, 0, 0, cloud.points.data());
    return cloud;
  }
  // One worker per leading digit; each owns a contiguous slice, so the
  // lexicographic order does not depend on scheduling.
  {
    std::vector<std::jthread> workers;
    workers.reserve(n);
    for (int j = 0; j < n; ++j) {
      workers.emplace_back([&, j] {
        fill_subtree(terms, 1, terms[0][j], cloud.points.data() + j * stride);
      });
    }
  }
  return cloud;
}

}  // namespace polyifs
