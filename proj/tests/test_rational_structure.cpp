#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "doctest.h"
#include "polyifs/error.hpp"
#include "polyifs/extreme_words.hpp"
#include "polyifs/hull_oracle.hpp"
#include "polyifs/rational_structure.hpp"
#include "property_suites.hpp"

using namespace polyifs;

namespace {

RationalIfsParams make(int n, double r, std::int64_t p, std::int64_t q) {
  return RationalIfsParams(IfsParams(n, r, CircleAngle(Rational(p, q))));
}

RationalIfsParams random_params(testing::Gen& g, int max_n, int max_q, double r_lo, double r_hi) {
  return RationalIfsParams(IfsParams(g.integer(2, max_n), g.real(r_lo, r_hi), CircleAngle(g.fraction(max_q))));
}

bool same_point_set(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Complex& z : a) {
    double best = INFINITY;
    for (const Complex& w : b) best = std::min(best, std::abs(z - w));
    if (best > tol) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("rational_structure") {
  TEST_CASE("period") {
    CHECK(period_b(3, 6).b == 2);
    CHECK(period_b(3, 6).a == 1);
    CHECK(period_b(5, 4).b == 4);
    CHECK(period_b(5, 4).a == 5);
    CHECK(period_b(3, 100).b == 100);
    CHECK(period_b(4, 2).b == 1);
    CHECK(period_b(4, 2).a == 2);
    CHECK_THROWS_AS(period_b(1, 3), DomainError);
    CHECK_THROWS_AS(period_b(3, 0), DomainError);
    CHECK_THROWS_AS(RationalIfsParams(IfsParams(3, 0.5, CircleAngle::from_double(0.25))),
                    RequiresExactAngle);
  }

  TEST_CASE("face normal sets") {
    const auto two = theta_set(make(2, 0.5, 0, 1));
    REQUIRE(two.size() == 2);
    CHECK(two[0].exact() == Rational(1, 4));
    CHECK(two[1].exact() == Rational(3, 4));

    const auto four = theta_set(make(4, 0.3, 0, 1));
    const std::vector<Rational> want{{1, 8}, {3, 8}, {5, 8}, {7, 8}};
    REQUIRE(four.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(four[i].exact() == want[i]);

    const auto twenty = theta_set(make(5, 0.4, 1, 4));
    CHECK(twenty.size() == 20);
    CHECK(std::is_sorted(twenty.begin(), twenty.end(),
                         [](const auto& x, const auto& y) { return x.exact() < y.exact(); }));
    CHECK(std::find(twenty.begin(), twenty.end(), CircleAngle(Rational(1, 10))) != twenty.end());
  }

  TEST_CASE("face IFS examples") {
    const auto square = make(4, 0.3, 0, 1);
    const auto f = face_ifs(square, CircleAngle(Rational(1, 8)));
    CHECK(f.lambda == doctest::Approx(0.3));
    CHECK(f.u0 == Word{0});
    CHECK(f.u1 == Word{1});
    CHECK(std::abs(f.t0 - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(f.t1 - Complex(0, 1)) < 1e-15);
    const auto [e0, e1] = f.endpoints();
    CHECK(std::abs(e0 - Complex(1 / 0.7, 0)) < 1e-12);
    CHECK(std::abs(e1 - Complex(0, 1 / 0.7)) < 1e-12);
    CHECK_FALSE(f.is_full_interval());

    const auto five = make(5, 0.4, 1, 4);
    CHECK(five.digit_shift() == 0);
    const auto g = face_ifs(five, CircleAngle(Rational(1, 10)));
    CHECK(g.lambda == doctest::Approx(0.0256).epsilon(1e-14));
    CHECK(g.u0 == Word{0, 4, 3, 2});
    CHECK(g.u1 == Word{1, 4, 3, 2});
    CHECK(g.tie_step == 0);
    CHECK(std::abs(g.apply(1, 0.0) - g.t1) == 0.0);

    CHECK_THROWS_AS(face_ifs(square, CircleAngle(Rational(0, 1))), NotAFace);
    CHECK_THROWS_AS(face_ifs(square, CircleAngle::from_double(0.125)), RequiresExactAngle);
  }

  TEST_CASE("hull polygons") {
    const auto square = hull_polygon(make(4, 0.3, 0, 1));
    std::vector<Complex> want;
    for (int j = 0; j < 4; ++j) want.push_back(std::polar(1 / 0.7, std::numbers::pi * j / 2));
    CHECK(same_point_set(square.vertices, want, 1e-12));
    CHECK_FALSE(square.degenerate);

    const auto segment = hull_polygon(make(2, 0.5, 0, 1));
    CHECK(segment.degenerate);
    CHECK(same_point_set(segment.vertices, {2.0, -2.0}, 1e-12));
    CHECK(segment.faces[0].is_full_interval);

    CHECK(hull_polygon(make(5, 0.4, 1, 4)).vertices.size() == 20);
    CHECK(hull_polygon(make(3, 0.48, 1, 100)).vertices.size() == 300);
  }

  TEST_CASE("convexity and interval faces") {
    const auto big = convexity_necessary(make(3, 0.48, 1, 100));
    CHECK(big.bound == doctest::Approx(std::pow(2.0, -0.01)));
    CHECK_FALSE(big.satisfied);
    CHECK(convexity_necessary(make(2, 0.5, 0, 1)).satisfied);
    CHECK(convexity_necessary(make(2, 0.5, 0, 1)).bound == 0.5);
    CHECK(convexity_necessary(make(3, 0.5, 0, 1)).satisfied);
    CHECK_FALSE(convexity_necessary(make(3, 0.49, 0, 1)).satisfied);

    CHECK(face_is_interval(make(2, 0.5, 0, 1)));
    CHECK_FALSE(face_is_interval(make(2, 0.4, 0, 1)));
    CHECK_FALSE(face_is_interval(make(5, 0.4, 1, 4)));
    CHECK(face_is_interval(make(3, 0.9, 1, 6)));  // b = 2, 0.81
  }

  TEST_CASE("constellations repeat after b and are disjoint before") {
    testing::Gen g(testing::test_seed() ^ 0x31u);
    for (int i = 0; i < 300; ++i) {
      const int n = g.integer(2, 10);
      const Rational phi = g.fraction(36);
      const IfsParams p(n, 0.5, CircleAngle(phi));
      const auto period = period_b(n, phi.den());
      CHECK(period.b * std::gcd<std::int64_t>(n, phi.den()) == phi.den());
      auto as_set = [&](std::int64_t k) {
        std::set<Rational> s;
        for (const auto& a : constellation(p, k)) s.insert(a.exact());
        return s;
      };
      const auto c0 = as_set(0);
      CHECK(as_set(period.b) == c0);
      for (std::int64_t k = 1; k < period.b; ++k) {
        for (const auto& a : as_set(k)) CHECK_FALSE(c0.contains(a));
      }
    }
  }

  TEST_CASE("digit shift identity") {
    testing::Gen g(testing::test_seed() ^ 0x32u);
    for (int i = 0; i < 200; ++i) {
      const auto rp = random_params(g, 9, 30, 0.3, 0.9);
      const int n = rp.n();
      const int s = rp.digit_shift();
      const std::int64_t k = g.integer(0, 50);
      const auto here = constellation(rp.base(), k);
      const auto there = constellation(rp.base(), k + rp.b());
      for (int d = 0; d < n; ++d) CHECK(there[d].exact() == here[(d + s) % n].exact());
    }
  }

  TEST_CASE("faces are optimal and self-similar") {
    testing::Gen g(testing::test_seed() ^ 0x33u);
    for (int i = 0; i < 80; ++i) {
      const auto rp = random_params(g, 7, 12, 0.3, 0.9);
      const auto thetas = theta_set(rp);
      const auto& theta = thetas[g.integer(0, static_cast<int>(thetas.size()) - 1)];
      const auto face = face_ifs(rp, theta);
      const auto [e0, e1] = face.endpoints();
      const int depth = depth_for_tolerance(rp.base());
      const auto s = support_value(rp.base(), theta, depth);
      const double tol = s.error_bar + 1e-9;
      CHECK(std::abs(v_theta(theta, e0) - s.value) <= tol);
      CHECK(std::abs(v_theta(theta, e1) - s.value) <= tol);

      // Twenty face maps agree with the concatenated block word.
      Complex z = 0;
      Word word;
      std::vector<int> picks(20);
      for (int& pick : picks) pick = g.integer(0, 1);
      for (auto it = picks.rbegin(); it != picks.rend(); ++it) z = face.apply(*it, z);
      // Block i of the extreme word carries its digits lowered by i * shift.
      for (std::size_t i = 0; i < picks.size(); ++i) {
        const int drop = static_cast<int>((i * face.digit_shift) % rp.n());
        word = word + (picks[i] == 0 ? face.u0 : face.u1).rotated(rp.n() - drop, rp.n());
      }
      CHECK(std::abs(z - evaluate(rp.base(), word)) <= 1e-12);
    }
  }

  TEST_CASE("hull vertices are invariant under rotation by xi") {
    testing::Gen g(testing::test_seed() ^ 0x34u);
    for (int i = 0; i < 60; ++i) {
      const auto rp = random_params(g, 7, 16, 0.2, 0.9);
      const auto hull = hull_polygon(rp);
      REQUIRE(hull.vertices.size() == static_cast<std::size_t>(rp.n() * rp.b()));
      std::vector<Complex> turned;
      for (const Complex& v : hull.vertices) turned.push_back(rp.base().root(1) * v);
      CHECK(same_point_set(turned, hull.vertices, 1e-9));
    }
  }
}
