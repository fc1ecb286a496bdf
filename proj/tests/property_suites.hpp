#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polyifs/angle.hpp"
#include "polyifs/ifs_core.hpp"

namespace polyifs::testing {

// POLYIFS_TEST_SEED from the environment, else the value baked in by CMake.
std::uint64_t test_seed();

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0 && cases > 0; }
};

// Random generators shared by the unit and acceptance binaries.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }
  // p/q in lowest terms with q in [1, max_q].
  Rational fraction(int max_q);
  CircleAngle angle(bool exact, int max_q = 40);
  IfsParams params(int max_n, double r_lo, double r_hi, bool exact_phi);
};

SuiteResult symmetry_equivariance_suite(std::uint64_t seed, int cases = 200);
SuiteResult product_structure_suite(std::uint64_t seed, int cases = 200);
SuiteResult self_similarity_suite(std::uint64_t seed, int cases = 120);
SuiteResult hull_idempotence_suite(std::uint64_t seed, int cases = 150);
SuiteResult svg_determinism_suite(std::uint64_t seed, int cases = 100);

std::vector<SuiteResult> all_property_suites(std::uint64_t seed);

}  // namespace polyifs::testing
