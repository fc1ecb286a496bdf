#include "polyifs/rational_structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "polyifs/error.hpp"
#include "polyifs/extreme_words.hpp"

namespace polyifs {

namespace {

std::set<Rational> exact_constellation(int n, const Rational& phi, std::int64_t k) {
  std::set<Rational> out;
  for (int j = 0; j < n; ++j) out.insert(frac(phi * Rational(k) + Rational(j, n)));
  return out;
}

}  // namespace

Period period_b(int n, std::int64_t q) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (q < 1) throw DomainError("q must be positive");
  const std::int64_t g = std::gcd(static_cast<std::int64_t>(n), q);
  const Period period{q / g, n / g};

  // Disjointness does not depend on p once gcd(p, q) = 1, so p = 1 suffices.
  const Rational phi(1, q);
  const auto c0 = exact_constellation(n, phi, 0);
  if (exact_constellation(n, phi, period.b) != c0) {
    throw StructuralError("constellation does not repeat after b = " + std::to_string(period.b));
  }
  for (std::int64_t i = 1; i < period.b; ++i) {
    for (const auto& angle : exact_constellation(n, phi, i)) {
      if (c0.contains(angle)) {
        throw StructuralError("constellations 0 and " + std::to_string(i) + " intersect");
      }
    }
  }
  return period;
}

RationalIfsParams::RationalIfsParams(IfsParams base)
    : base_(std::move(base)),
      p_(base_.phi().exact().num()),
      q_(base_.phi().exact().den()),
      period_(period_b(base_.n(), q_)) {}

int RationalIfsParams::digit_shift() const {
  return static_cast<int>((p_ % n()) * (period_.a % n()) % n());
}

std::vector<CircleAngle> theta_set(const RationalIfsParams& params) {
  const int n = params.n();
  const Rational phi = params.base().phi().exact();
  std::vector<Rational> angles;
  for (std::int64_t l = 0; l < params.b(); ++l) {
    for (int m = 0; m < n; ++m) {
      angles.push_back(frac(phi * Rational(l) + Rational(m, n) + Rational(1, 2 * n)));
    }
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  const auto expected = static_cast<std::size_t>(n * params.b());
  if (angles.size() != expected) {
    throw StructuralError("face normal set has " + std::to_string(angles.size()) +
                          " distinct angles, expected " + std::to_string(expected));
  }
  return {angles.begin(), angles.end()};
}

std::array<Complex, 2> FaceIfs::endpoints() const {
  return {t0 / (1.0 - lambda), t1 / (1.0 - lambda)};
}

FaceIfs face_ifs(const RationalIfsParams& params, const CircleAngle& theta) {
  const IfsParams& base = params.base();
  const int n = params.n();
  const std::int64_t b = params.b();
  const SupportQuery query(base, CircleAngle(theta.exact()));

  std::vector<DigitChoices> block;
  block.reserve(b);
  std::vector<std::int64_t> ties;
  for (std::int64_t k = 0; k < b; ++k) {
    block.push_back(digit_choices(base, query, k));
    if (block.back().is_pair()) ties.push_back(k);
  }
  if (ties.empty()) throw NotAFace("theta " + theta.to_string() + " is not a face normal");
  if (ties.size() > 1) {
    throw StructuralError("theta " + theta.to_string() + " ties " + std::to_string(ties.size()) +
                          " times in one period");
  }

  // The next block must repeat this one with every digit lowered by s.
  const int shift = params.digit_shift();
  for (std::int64_t k = 0; k < b; ++k) {
    DigitChoices next = digit_choices(base, query, k + b);
    const auto here = block[k].digits();
    auto there = next.digits();
    for (auto& d : there) d = (d + shift) % n;
    if (here != there) {
      throw StructuralError("digit choices at step " + std::to_string(k + b) +
                            " are not a shift of step " + std::to_string(k));
    }
  }

  std::vector<int> d0(b);
  std::vector<int> d1(b);
  for (std::int64_t k = 0; k < b; ++k) {
    d0[k] = block[k].m;
    d1[k] = block[k].is_pair() ? *block[k].second : block[k].m;
  }
  FaceIfs face{CircleAngle(theta.exact()),
               std::pow(params.r(), static_cast<double>(b)),
               Word(std::move(d0)),
               Word(std::move(d1)),
               0,
               0,
               shift,
               ties.front()};
  face.t0 = evaluate(base, face.u0);
  face.t1 = evaluate(base, face.u1);
  return face;
}

HullPolygon hull_polygon(const RationalIfsParams& params) {
  const auto thetas = theta_set(params);
  HullPolygon hull;
  hull.degenerate = thetas.size() == 2;
  hull.faces.reserve(thetas.size());
  for (const auto& theta : thetas) {
    FaceIfs face = face_ifs(params, theta);
    auto [e0, e1] = face.endpoints();
    // Counterclockwise the edge runs along e^{2 pi i (theta + 1/4)}.
    const CircleAngle tangent = theta + CircleAngle(Rational(1, 4));
    if (v_theta(tangent, e0) > v_theta(tangent, e1)) std::swap(e0, e1);
    hull.faces.push_back({theta, e0, e1, face.is_full_interval(), std::move(face)});
  }

  const IfsParams& base = params.base();
  const int depth = depth_for_tolerance(base, 1e-10);
  const double slack = 1e-9 + tail_bound(base, depth);
  const std::size_t count = hull.faces.size();
  for (std::size_t i = 0; i < count; ++i) {
    const HullFace& here = hull.faces[i];
    const HullFace& next = hull.faces[(i + 1) % count];
    if (std::abs(here.endpoint_hi - next.endpoint_lo) > 1e-9) {
      throw StructuralError("faces at " + here.theta.to_string() + " and " +
                            next.theta.to_string() + " do not share an endpoint");
    }
    Rational upper = next.theta.exact();
    if (i + 1 == count) upper = upper + Rational(1);
    const CircleAngle mid((here.theta.exact() + upper) * Rational(1, 2));
    const auto extreme = extreme_points(base, SupportQuery(base, mid), depth, 2);
    if (extreme.classification != ExtremeClass::Unique ||
        std::abs(extreme.points.front() - here.endpoint_hi) > slack) {
      throw StructuralError("vertex between faces " + here.theta.to_string() + " and " +
                            next.theta.to_string() +
                            " disagrees with the extreme point at " + mid.to_string());
    }
    hull.vertices.push_back(here.endpoint_hi);
  }
  return hull;
}

ConvexityBound convexity_necessary(const RationalIfsParams& params) {
  const double bound = std::pow(2.0, -1.0 / static_cast<double>(params.b()));
  return {bound, params.r() >= bound};
}

bool face_is_interval(const RationalIfsParams& params) {
  return std::pow(params.r(), static_cast<double>(params.b())) >= 0.5;
}

}  // namespace polyifs
