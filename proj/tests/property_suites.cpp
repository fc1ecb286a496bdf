#include "property_suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "polyifs/extreme_words.hpp"
#include "polyifs/hull_oracle.hpp"
#include "polyifs/render_svg.hpp"

#ifndef POLYIFS_TEST_SEED
#define POLYIFS_TEST_SEED 20161015
#endif

namespace polyifs::testing {

std::uint64_t test_seed() {
  if (const char* env = std::getenv("POLYIFS_TEST_SEED")) return std::strtoull(env, nullptr, 10);
  return POLYIFS_TEST_SEED;
}

Rational Gen::fraction(int max_q) {
  const int q = integer(1, max_q);
  int p = integer(0, q - 1);
  while (std::gcd(p, q) != 1) p = integer(0, q - 1);
  return Rational(p, q);
}

CircleAngle Gen::angle(bool exact, int max_q) {
  if (exact) return CircleAngle(fraction(max_q));
  return CircleAngle::from_double(real(0.0, 1.0));
}

IfsParams Gen::params(int max_n, double r_lo, double r_hi, bool exact_phi) {
  return IfsParams(integer(2, max_n), real(r_lo, r_hi), angle(exact_phi));
}

namespace {

void fail(SuiteResult& s, const std::string& what) {
  if (s.failures++ == 0) s.first_failure = what;
}

std::string describe(const IfsParams& p) {
  std::ostringstream o;
  o << "n=" << p.n() << " r=" << p.r() << " phi=" << p.phi().to_string();
  return o.str();
}

}  // namespace

SuiteResult symmetry_equivariance_suite(std::uint64_t seed, int cases) {
  SuiteResult s{"symmetry equivariance"};
  Gen g(seed ^ 0x51u);
  for (int i = 0; i < cases; ++i, ++s.cases) {
    const bool exact = i % 2 == 0;
    const IfsParams params = g.params(9, 0.1, 0.9, exact);
    const CircleAngle theta = g.angle(exact, 60);
    const CircleAngle turned = theta + (exact ? CircleAngle(Rational(1, params.n()))
                                              : CircleAngle::from_double(1.0 / params.n()));
    const SupportQuery q0(params, theta);
    const SupportQuery q1(params, turned);
    for (int k = 0; k < 3 * params.n(); ++k) {
      auto base = digit_choices(params, q0, k).digits();
      for (auto& d : base) d = (d + 1) % params.n();
      if (digit_choices(params, q1, k).digits() != base) {
        fail(s, describe(params) + " theta=" + theta.to_string() + " k=" + std::to_string(k));
        break;
      }
    }
  }
  return s;
}

SuiteResult product_structure_suite(std::uint64_t seed, int cases) {
  SuiteResult s{"product structure local optimality"};
  Gen g(seed ^ 0x52u);
  constexpr int kDepth = 8;
  for (int i = 0; s.cases < cases; ++i) {
    const bool exact = i % 2 == 0;
    const IfsParams params = g.params(7, 0.3, 0.9, exact);
    const CircleAngle theta = g.angle(exact, 30);
    const auto set = extreme_word_set(params, SupportQuery(params, theta), kDepth);
    std::vector<int> digits(kDepth);
    for (int k = 0; k < kDepth; ++k) {
      const auto options = set.choices[k].digits();
      digits[k] = options[g.integer(0, static_cast<int>(options.size()) - 1)];
    }
    const int k = g.integer(0, 5);
    const auto allowed = set.choices[k].digits();
    if (static_cast<int>(allowed.size()) == params.n()) continue;  // n = 2 with a tie
    ++s.cases;
    int other = g.integer(0, params.n() - 1);
    while (std::find(allowed.begin(), allowed.end(), other) != allowed.end()) {
      other = g.integer(0, params.n() - 1);
    }
    std::vector<int> mutated = digits;
    mutated[k] = other;
    const double best = v_theta(theta, evaluate(params, Word(digits)));
    const double worse = v_theta(theta, evaluate(params, Word(mutated)));
    if (!(worse < best)) {
      fail(s, describe(params) + " theta=" + theta.to_string() + " k=" + std::to_string(k));
    }
  }
  return s;
}

SuiteResult self_similarity_suite(std::uint64_t seed, int cases) {
  SuiteResult s{"cloud self-similarity"};
  Gen g(seed ^ 0x53u);
  for (int i = 0; i < cases; ++i, ++s.cases) {
    const IfsParams params = g.params(6, 0.1, 0.95, i % 2 == 0);
    const int m = g.integer(0, params.n() <= 3 ? 6 : 4);
    const auto small = enumerate_cloud(params, m);
    const auto large = enumerate_cloud(params, m + 1);
    const Complex c = params.c();
    const std::size_t stride = small.points.size();
    bool ok = large.points.size() == stride * params.n();
    for (int j = 0; j < params.n() && ok; ++j) {
      for (std::size_t idx = 0; idx < stride && ok; ++idx) {
        ok = std::abs(large.points[j * stride + idx] - (params.root(j) + c * small.points[idx])) <= 1e-12;
      }
    }
    if (!ok) fail(s, describe(params) + " m=" + std::to_string(m));
  }
  return s;
}

SuiteResult hull_idempotence_suite(std::uint64_t seed, int cases) {
  SuiteResult s{"convex hull idempotence"};
  Gen g(seed ^ 0x54u);
  for (int i = 0; i < cases; ++i, ++s.cases) {
    std::vector<Complex> pts;
    if (i % 2 == 0) {
      const int count = g.integer(1, 400);
      for (int k = 0; k < count; ++k) pts.emplace_back(g.real(-3, 3), g.real(-3, 3));
    } else {
      const IfsParams params = g.params(6, 0.2, 0.8, g.coin());
      pts = enumerate_cloud(params, params.n() <= 3 ? 7 : 4).points;
    }
    const auto once = convex_hull_2d(pts);
    const auto twice = convex_hull_2d(once);
    if (once != twice) fail(s, "case " + std::to_string(i) + " with " + std::to_string(pts.size()) + " points");
  }
  return s;
}

SuiteResult svg_determinism_suite(std::uint64_t seed, int cases) {
  SuiteResult s{"SVG determinism"};
  Gen g(seed ^ 0x55u);
  for (int i = 0; i < cases; ++i, ++s.cases) {
    const bool exact = i % 2 == 0;
    const IfsParams params = g.params(5, 0.2, 0.7, exact);
    RenderOptions options;
    options.hull = exact;
    options.support_lines = true;
    options.thetas = {g.angle(false)};
    const int depth = g.integer(1, 4);
    const std::string a = render_limit_set(params, depth, options);
    const std::string b = render_limit_set(params, depth, options);
    const std::string c = render_constellations(params, 0, 3, options.thetas.front());
    const std::string d = render_constellations(params, 0, 3, options.thetas.front());
    if (a != b || c != d || a.empty() || c.empty()) fail(s, describe(params));
  }
  return s;
}

std::vector<SuiteResult> all_property_suites(std::uint64_t seed) {
  return {symmetry_equivariance_suite(seed), product_structure_suite(seed),
          self_similarity_suite(seed), hull_idempotence_suite(seed), svg_determinism_suite(seed)};
}

}  // namespace polyifs::testing
