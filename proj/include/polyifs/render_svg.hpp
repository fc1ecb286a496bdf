#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyifs/angle.hpp"
#include "polyifs/ifs_core.hpp"

namespace polyifs {

struct RenderOptions {
  bool hull = false;           // exact phi only
  bool support_lines = false;  // at every face normal (exact phi) plus `thetas`
  std::vector<CircleAngle> thetas;
  std::optional<double> point_radius;  // default max(0.002 w, w r^depth), w = viewBox width
  std::uint64_t budget = kDefaultPointBudget;
};

// Cloud points as circles, optional hull outline and support lines, in a
// viewBox covering |z| <= 1/(1-r) with a 5% margin. Deterministic output:
// fixed 6-decimal coordinates, lexicographic point order.
std::string render_limit_set(const IfsParams& params, int depth, const RenderOptions& options = {});

// One panel per k in [k_first, k_last] with the n unit directions of
// c^k xi^j; with theta set, the maximizing digit(s) are highlighted and the
// theta direction is drawn.
std::string render_constellations(const IfsParams& params, std::int64_t k_first,
                                  std::int64_t k_last,
                                  const std::optional<CircleAngle>& theta = std::nullopt);

}  // namespace polyifs
