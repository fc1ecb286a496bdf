#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polyifs/extreme_words.hpp"
#include "polyifs/hull_oracle.hpp"
#include "polyifs/ifs_core.hpp"
#include "polyifs/rational_structure.hpp"

namespace polyifs {

using json = nlohmann::json;

// "p/q" string for exact angles, a number otherwise.
json angle_to_json(const CircleAngle& angle);
CircleAngle angle_from_json(const json& j);

// Header "re,im", one point per row with 17 significant digits.
std::string cloud_to_csv(const PointCloud& cloud);

// {"n","r","phi","depth","tail_bound","points":[[re,im],...]}
json cloud_to_json(const PointCloud& cloud);
PointCloud cloud_from_json(const json& j);

// {"theta","classification","choices","points","support_value","error_bar"}
json extreme_to_json(const CircleAngle& theta, const ExtremePoints& extreme,
                     const SupportValue& support);

// {"n","r","phi","b","a","theta","faces","vertices","convexity_bound","degenerate"}
json hull_to_json(const RationalIfsParams& params, const HullPolygon& hull);

// Re-checks a hull document against the polygon invariants: n*b faces with
// ascending normals, two-endpoint faces with lambda = r^b, neighbouring faces
// sharing a vertex, and n-fold rotational symmetry of the vertex set.
// Returns the list of violations (empty when valid).
std::vector<std::string> validate_hull_json(const json& j);

json report_to_json(const OracleReport& report);

}  // namespace polyifs
