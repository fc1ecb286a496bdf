#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyifs/angle.hpp"
#include "polyifs/ifs_core.hpp"

namespace polyifs {

// Andrew's monotone chain. Counterclockwise, starting from the lowest-x
// (then lowest-y) point; collinear points dropped with a 1e-12 cross-product
// tolerance. All-collinear input yields the two segment ends, a single
// point yields itself. Throws DomainError on empty input.
std::vector<Complex> convex_hull_2d(std::span<const Complex> points);

// max over the cloud of v_theta.
double brute_force_support(const PointCloud& cloud, const CircleAngle& theta);

// Distance from p to a convex polygon given counterclockwise (0 inside).
double distance_to_convex_polygon(Complex p, std::span<const Complex> polygon);

// Hausdorff distance between two convex polygons via vertex-to-polygon
// distances both ways.
double hausdorff_convex(std::span<const Complex> a, std::span<const Complex> b);

// The hull vertices of enumerate_cloud(params, depth), built level by level
// from hull(cloud_m) = hull(U_j xi^j + c hull(cloud_{m-1})) without
// materializing n^depth points. tail_bound matches the full cloud.
PointCloud hull_cloud(const IfsParams& params, int depth);

struct SupportCheck {
  CircleAngle theta;
  double analytic;
  double brute_force;
  double diff;
  double slack;
  bool pass() const { return diff <= slack; }
};

struct OracleReport {
  std::vector<SupportCheck> support;  // sorted by theta
  std::optional<double> hausdorff;    // rational phi only
  double hausdorff_slack = 0.0;
  std::size_t oracle_hull_vertices = 0;
  std::size_t analytic_vertices = 0;
  double slack_budget = 0.0;          // analytic tail + cloud tail
  bool pass = false;

  double worst_support_diff() const;
  std::vector<SupportCheck> worst_offenders(std::size_t count) const;
};

// Compares support_value against brute force on a depth-`depth` cloud over a
// uniform grid plus, for exact phi, every face normal and the midpoints
// between neighbours; for exact phi also compares hull_polygon to the cloud
// hull. Throws BudgetExceeded like enumerate_cloud.
OracleReport verify(const IfsParams& params, int depth, int grid = 360,
                    std::uint64_t budget = kDefaultPointBudget);

}  // namespace polyifs
