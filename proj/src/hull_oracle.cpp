#include "polyifs/hull_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyifs/error.hpp"
#include "polyifs/extreme_words.hpp"
#include "polyifs/rational_structure.hpp"

namespace polyifs {

namespace {

constexpr double kCollinearEps = 1e-12;

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Removes vertices lying within kCollinearEps of the segment joining their
// neighbours, then restores the lowest-x (then lowest-y) vertex to the front.
void drop_near_collinear(std::vector<Complex>& hull) {
  const auto lex = [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  for (std::size_t i = 0; hull.size() > 2 && i < hull.size();) {
    const Complex a = hull[(i + hull.size() - 1) % hull.size()];
    const Complex b = hull[i];
    const Complex c = hull[(i + 1) % hull.size()];
    const double len = std::abs(c - a);
    const double along = ((b - a) * std::conj(c - a)).real();
    if (len > 0 && std::abs(cross(a, b, c)) <= kCollinearEps * len && along >= 0 &&
        along <= len * len) {
      hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end(), lex), hull.end());
}

}  // namespace

std::vector<Complex> convex_hull_2d(std::span<const Complex> points) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // The chain itself pops on exact sign only: a tolerance here can discard a
  // true vertex when several points share an x coordinate up to rounding.
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Complex& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  drop_near_collinear(hull);
  return hull;
}

double brute_force_support(const PointCloud& cloud, const CircleAngle& theta) {
  if (cloud.points.empty()) throw DomainError("support of an empty cloud");
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& p : cloud.points) best = std::max(best, v_theta(theta, p));
  return best;
}

double distance_to_convex_polygon(Complex p, std::span<const Complex> polygon) {
  if (polygon.empty()) throw DomainError("distance to an empty polygon");
  if (polygon.size() == 1) return std::abs(p - polygon.front());
  if (polygon.size() >= 3) {
    bool inside = true;
    for (std::size_t i = 0; i < polygon.size() && inside; ++i) {
      inside = cross(polygon[i], polygon[(i + 1) % polygon.size()], p) >= -kCollinearEps;
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    best = std::min(best, distance_to_segment(p, polygon[i], polygon[(i + 1) % polygon.size()]));
  }
  return best;
}

double hausdorff_convex(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (const Complex& p : a) worst = std::max(worst, distance_to_convex_polygon(p, b));
  for (const Complex& p : b) worst = std::max(worst, distance_to_convex_polygon(p, a));
  return worst;
}

PointCloud hull_cloud(const IfsParams& params, int depth) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  const Complex c = params.c();
  std::vector<Complex> hull{Complex(0.0, 0.0)};
  std::vector<Complex> images;
  for (int level = 0; level < depth; ++level) {
    images.clear();
    for (int j = 0; j < params.n(); ++j)
      for (const Complex& p : hull) images.push_back(params.root(j) + c * p);
    hull = convex_hull_2d(images);
  }
  return PointCloud{params, depth, tail_bound(params, depth), std::move(hull)};
}

double OracleReport::worst_support_diff() const {
  double worst = 0.0;
  for (const auto& s : support) worst = std::max(worst, s.diff);
  return worst;
}

std::vector<SupportCheck> OracleReport::worst_offenders(std::size_t count) const {
  std::vector<SupportCheck> out = support;
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.diff - x.slack > y.diff - y.slack; });
  if (out.size() > count) out.resize(count);
  return out;
}

OracleReport verify(const IfsParams& params, int depth, int grid, std::uint64_t budget) {
  if (grid < 0) throw DomainError("grid must be non-negative");
  const PointCloud cloud = enumerate_cloud(params, depth, budget);
  const int analytic_depth = depth_for_tolerance(params, 1e-9);
  const double analytic_tail = tail_bound(params, analytic_depth);

  std::vector<CircleAngle> thetas;
  const bool exact = params.phi().is_exact();
  for (int i = 0; i < grid; ++i) {
    thetas.push_back(exact ? CircleAngle(Rational(i, grid))
                           : CircleAngle::from_double(static_cast<double>(i) / grid));
  }
  std::optional<RationalIfsParams> rational;
  if (exact) {
    rational.emplace(params);
    const auto faces = theta_set(*rational);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      thetas.push_back(faces[i]);
      Rational upper = faces[(i + 1) % faces.size()].exact();
      if (i + 1 == faces.size()) upper = upper + Rational(1);
      thetas.emplace_back((faces[i].exact() + upper) * Rational(1, 2));
    }
  }
  std::sort(thetas.begin(), thetas.end(),
            [](const auto& x, const auto& y) { return x.value() < y.value(); });
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

  OracleReport report;
  report.slack_budget = analytic_tail + cloud.tail_bound;
  report.support.reserve(thetas.size());
  for (const auto& theta : thetas) {
    const double analytic = support_value(params, theta, analytic_depth).value;
    const double brute = brute_force_support(cloud, theta);
    report.support.push_back(
        {theta, analytic, brute, std::abs(analytic - brute), report.slack_budget});
  }

  bool pass = std::all_of(report.support.begin(), report.support.end(),
                          [](const auto& s) { return s.pass(); });
  if (rational) {
    const HullPolygon polygon = hull_polygon(*rational);
    const auto oracle = convex_hull_2d(cloud.points);
    report.hausdorff = hausdorff_convex(polygon.vertices, oracle);
    report.hausdorff_slack = cloud.tail_bound + 1e-9;
    report.oracle_hull_vertices = oracle.size();
    report.analytic_vertices = polygon.vertices.size();
    pass = pass && *report.hausdorff <= report.hausdorff_slack;
  }
  report.pass = pass;
  return report;
}

}  // namespace polyifs
