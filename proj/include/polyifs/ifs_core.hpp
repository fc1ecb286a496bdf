#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "polyifs/angle.hpp"

namespace polyifs {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

// The system f_j(z) = c z + xi^j, j = 0..n-1, with xi = exp(2 pi i / n) and
// c = r exp(2 pi i phi). phi is exact or float; that choice selects exact or
// tolerance-based tie detection downstream.
class IfsParams {
 public:
  // Throws DomainError unless n >= 2 and 0 < r < 1.
  IfsParams(int n, double r, CircleAngle phi);

  int n() const { return n_; }
  double r() const { return r_; }
  const CircleAngle& phi() const { return phi_; }

  Complex c() const;
  Complex root(int j) const;  // xi^j, j taken mod n

  // Angle of c^k xi^j divided by 2 pi, reduced mod 1. Exact when phi is.
  CircleAngle term_angle(std::int64_t k, int j) const;
  // c^k xi^j, with the angle reduced before the trig call.
  Complex term(std::int64_t k, int j) const;

 private:
  int n_;
  double r_;
  CircleAngle phi_;
};

// Finite digit string; digit k selects the map applied k-th from the outside,
// so (j0, j1, ...) means f_{j0} o f_{j1} o ...
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> digits) : digits_(std::move(digits)) {}
  Word(std::initializer_list<int> digits) : digits_(digits) {}

  std::span<const int> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t k) const { return digits_[k]; }
  void push_back(int d) { digits_.push_back(d); }

  // Throws InvalidWord if any digit is outside [0, n).
  void validate(int n) const;

  // Digit-wise j -> j + shift mod n; realizes z -> xi^shift z on evaluations.
  Word rotated(int shift, int n) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> digits_;
};

// The word of length `depth` at position `index` in lexicographic order.
Word word_at(int n, int depth, std::uint64_t index);

struct PointCloud {
  IfsParams params;
  int depth;
  // Certified covering radius: every point of the limit set is within this
  // distance of a cloud point and vice versa.
  double tail_bound;
  std::vector<Complex> points;  // lexicographic by word
};

// sum_{k<m} c^k xi^{word[k]}.
Complex evaluate(const IfsParams& params, const Word& word);

// xi^digit / (1 - c), the image of the constant infinite word.
Complex fixed_point(const IfsParams& params, int digit);

// r^depth / (1 - r).
double tail_bound(const IfsParams& params, int depth);

// Smallest depth with tail_bound(depth) < eps.
int depth_for_tolerance(const IfsParams& params, double eps = 1e-9);

// Number of points a depth-`depth` cloud would contain, saturating at UINT64_MAX.
std::uint64_t cloud_size(int n, int depth);

// All n^depth evaluations in lexicographic word order. Throws BudgetExceeded
// when n^depth > budget.
PointCloud enumerate_cloud(const IfsParams& params, int depth,
                           std::uint64_t budget = kDefaultPointBudget);

}  // namespace polyifs
