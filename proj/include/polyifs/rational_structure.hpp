#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "polyifs/angle.hpp"
#include "polyifs/ifs_core.hpp"

namespace polyifs {

// b is the least positive integer with b/q = a/n for some integer a:
// b = q / gcd(n, q), a = n / gcd(n, q). Constellations repeat with period b
// (as sets) and are pairwise disjoint within one period.
struct Period {
  std::int64_t b;
  std::int64_t a;
};

// Throws StructuralError if the exact constellation check fails.
Period period_b(int n, std::int64_t q);

// IfsParams whose phi is exact p/q, with the period data attached.
class RationalIfsParams {
 public:
  // Throws RequiresExactAngle when phi is a float.
  explicit RationalIfsParams(IfsParams base);

  const IfsParams& base() const { return base_; }
  int n() const { return base_.n(); }
  double r() const { return base_.r(); }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t b() const { return period_.b; }
  std::int64_t a() const { return period_.a; }
  // p*a mod n: digits drop by this much from one length-b block to the next.
  int digit_shift() const;

 private:
  IfsParams base_;
  std::int64_t p_;
  std::int64_t q_;
  Period period_;
};

// The n*b face normals l*phi + m/n + 1/(2n), sorted ascending in [0, 1).
std::vector<CircleAngle> theta_set(const RationalIfsParams& params);

// Two-map system z -> lambda z + t_i whose attractor is the extreme set at a
// face normal theta. Block words u0, u1 (length b) differ only at tie_step.
struct FaceIfs {
  CircleAngle theta;
  double lambda;  // r^b
  Word u0;
  Word u1;
  Complex t0;
  Complex t1;
  int digit_shift;
  std::int64_t tie_step;

  Complex apply(int i, Complex z) const { return lambda * z + (i == 0 ? t0 : t1); }
  // Fixed points t_i / (1 - lambda); the attractor spans the segment between them.
  std::array<Complex, 2> endpoints() const;
  bool is_full_interval() const { return lambda >= 0.5; }
};

// Throws NotAFace if theta is not exactly in theta_set(params).
FaceIfs face_ifs(const RationalIfsParams& params, const CircleAngle& theta);

struct HullFace {
  CircleAngle theta;
  Complex endpoint_lo;  // start of the edge in counterclockwise order
  Complex endpoint_hi;
  bool is_full_interval;
  FaceIfs face;
};

struct HullPolygon {
  std::vector<HullFace> faces;   // ascending theta
  std::vector<Complex> vertices; // vertices[i] joins faces[i] and faces[i+1]
  bool degenerate = false;       // n*b == 2: the hull is a segment
};

// Builds the n*b faces and checks each vertex against the unique extreme
// point at the midpoint angle between neighbouring normals.
HullPolygon hull_polygon(const RationalIfsParams& params);

struct ConvexityBound {
  double bound;   // 2^(-1/b)
  bool satisfied; // r >= bound; necessary for convexity, not sufficient
};

ConvexityBound convexity_necessary(const RationalIfsParams& params);

// r^b >= 1/2.
bool face_is_interval(const RationalIfsParams& params);

}  // namespace polyifs
