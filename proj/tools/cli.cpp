#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "polyifs/error.hpp"
#include "polyifs/extreme_words.hpp"
#include "polyifs/hull_oracle.hpp"
#include "polyifs/ifs_core.hpp"
#include "polyifs/rational_structure.hpp"
#include "polyifs/render_svg.hpp"
#include "polyifs/serialize.hpp"

namespace polyifs::cli {

namespace {

constexpr const char* kNonSufficiency =
    "note: this bound is necessary, not sufficient. At c = 1/2, n = 3 every face is an interval "
    "yet the limit set (a Sierpinski triangle) is not convex.";

struct IfsArgs {
  int n = 0;
  double r = 0.0;
  std::string phi;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "number of maps (n >= 2)")->required();
    app->add_option("--r", r, "modulus of c, 0 < r < 1")->required();
    app->add_option("--phi", phi, "argument of c over 2 pi: p/q (exact) or a decimal (float)")
        ->required();
  }
  IfsParams params() const { return IfsParams(n, r, CircleAngle::parse(phi)); }
};

std::uint64_t point_budget() {
  if (const char* env = std::getenv("POLYIFS_BUDGET")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw DomainError("POLYIFS_BUDGET must be a positive integer, got '" + std::string(s) + "'");
    }
    return v;
  }
  return kDefaultPointBudget;
}

std::string fmt(double x, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string fmt(Complex z) {
  std::ostringstream s;
  s << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ")
    << std::abs(z.imag()) << "i";
  return s.str();
}

// "A:B:STEP", inclusive of B up to rounding.
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      parts.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw DomainError("malformed range '" + text + "', expected A:B:STEP");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0]) {
    throw DomainError("malformed range '" + text + "', expected A:B:STEP with STEP > 0, A <= B");
  }
  const auto count = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = parts[0] + static_cast<double>(i) * parts[2];
  return out;
}

std::vector<CircleAngle> parse_angle_list(const std::string& text) {
  std::vector<CircleAngle> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(CircleAngle::parse(item));
  }
  if (out.empty()) throw DomainError("empty angle list");
  return out;
}

int cmd_points(const IfsArgs& ifs, int depth, bool as_json, bool as_csv, std::ostream& out) {
  const PointCloud cloud = enumerate_cloud(ifs.params(), depth, point_budget());
  if (as_json) {
    out << cloud_to_json(cloud).dump() << "\n";
  } else if (as_csv) {
    out << cloud_to_csv(cloud);
  } else {
    out << "points: " << cloud.points.size() << "\n"
        << "depth: " << cloud.depth << "\n"
        << "tail_bound: " << fmt(cloud.tail_bound) << "\n"
        << "(use --csv or --json for the coordinates)\n";
  }
  return 0;
}

int cmd_extreme(const IfsArgs& ifs, const std::string& theta_text, std::optional<int> depth,
                double tol, std::size_t cap, bool as_json, std::ostream& out) {
  const IfsParams params = ifs.params();
  const CircleAngle theta = CircleAngle::parse(theta_text);
  const int m = depth.value_or(depth_for_tolerance(params, 1e-9));
  const SupportQuery query(params, theta, tol);
  const ExtremePoints extreme = extreme_points(params, query, m, cap);
  const SupportValue support = support_value(params, theta, m);
  if (as_json) {
    out << extreme_to_json(theta, extreme, support).dump() << "\n";
    return 0;
  }
  out << "theta: " << theta.to_string() << (query.exact() ? " (exact)" : " (float)") << "\n"
      << "depth: " << m << "\n"
      << "classification: " << to_string(extreme.classification) << "\n"
      << "tie steps:";
  if (extreme.tie_steps.empty()) out << " none";
  for (std::size_t i = 0; i < extreme.tie_steps.size() && i < 16; ++i) out << " " << extreme.tie_steps[i];
  if (extreme.tie_steps.size() > 16) out << " ...";
  out << "\n"
      << "support value: " << fmt(support.value) << " +/- " << fmt(support.error_bar, 3) << "\n"
      << "extreme points (" << extreme.points.size() << (extreme.truncated ? ", truncated" : "")
      << "):\n";
  for (const Complex& p : extreme.points) out << "  " << fmt(p) << "\n";
  return 0;
}

int cmd_theta(const IfsArgs& ifs, bool as_json, std::ostream& out) {
  const RationalIfsParams params(ifs.params());
  const auto thetas = theta_set(params);
  if (as_json) {
    json list = json::array();
    for (const auto& t : thetas) list.push_back(angle_to_json(t));
    out << json{{"b", params.b()}, {"a", params.a()}, {"theta", list}}.dump() << "\n";
    return 0;
  }
  out << "b = " << params.b() << ", a = " << params.a() << ", " << thetas.size() << " face normals\n";
  for (const auto& t : thetas) out << t.to_string() << "\n";
  return 0;
}

int cmd_hull(const IfsArgs& ifs, bool as_json, bool as_csv, std::ostream& out) {
  const RationalIfsParams params(ifs.params());
  const HullPolygon hull = hull_polygon(params);
  if (as_json) {
    out << hull_to_json(params, hull).dump() << "\n";
    return 0;
  }
  if (as_csv) {
    PointCloud vertices{params.base(), 0, 0.0, hull.vertices};
    out << cloud_to_csv(vertices);
    return 0;
  }
  out << "polygon with " << hull.faces.size() << " sides (b = " << params.b()
      << ", face contraction r^b = " << fmt(std::pow(params.r(), static_cast<double>(params.b())))
      << ", faces are " << (face_is_interval(params) ? "intervals" : "Cantor sets") << ")"
      << (hull.degenerate ? " [degenerate: segment]" : "") << "\n";
  for (const auto& face : hull.faces) {
    out << "  theta " << std::setw(10) << face.theta.to_string() << "  " << fmt(face.endpoint_lo)
        << "  ->  " << fmt(face.endpoint_hi) << "\n";
  }
  return 0;
}

int cmd_check_convex(const IfsArgs& ifs, bool as_json, std::ostream& out) {
  const RationalIfsParams params(ifs.params());
  const ConvexityBound bound = convexity_necessary(params);
  const bool interval = face_is_interval(params);
  if (as_json) {
    out << json{{"b", params.b()},
                {"convexity_bound", bound.bound},
                {"satisfied", bound.satisfied},
                {"face_is_interval", interval},
                {"note", kNonSufficiency}}
               .dump()
        << "\n";
    return 0;
  }
  out << "b = " << params.b() << "\n"
      << "necessary bound: |c| >= 2^(-1/b) = " << fmt(bound.bound) << "\n"
      << "r = " << fmt(params.r()) << ": " << (bound.satisfied ? "satisfied" : "not satisfied")
      << (bound.satisfied ? "" : " (the limit set is not convex)") << "\n"
      << "faces are " << (interval ? "intervals" : "Cantor sets") << "\n"
      << kNonSufficiency << "\n";
  return 0;
}

int cmd_verify(const IfsArgs& ifs, int depth, int grid, bool as_json, std::ostream& out) {
  const OracleReport report = verify(ifs.params(), depth, grid, point_budget());
  if (as_json) {
    out << report_to_json(report).dump() << "\n";
  } else {
    out << "support checks: " << report.support.size()
        << ", worst |analytic - brute force| = " << fmt(report.worst_support_diff(), 4)
        << " (slack " << fmt(report.slack_budget, 4) << ")\n";
    if (report.hausdorff) {
      out << "hull Hausdorff distance: " << fmt(*report.hausdorff, 4) << " (slack "
          << fmt(report.hausdorff_slack, 4) << "); analytic vertices " << report.analytic_vertices
          << ", oracle hull vertices " << report.oracle_hull_vertices << "\n";
    }
    for (const auto& s : report.worst_offenders(3)) {
      out << "  theta " << s.theta.to_string() << ": diff " << fmt(s.diff, 4) << "\n";
    }
    out << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? 0 : 2;
}

int cmd_render(const IfsArgs& ifs, const std::string& path, int depth, bool hull, bool lines,
               const std::string& constellations, const std::vector<std::string>& thetas,
               std::optional<double> radius, std::ostream& out) {
  const IfsParams params = ifs.params();
  std::vector<CircleAngle> angles;
  for (const auto& t : thetas) angles.push_back(CircleAngle::parse(t));
  std::string svg;
  if (!constellations.empty()) {
    const auto dots = constellations.find("..");
    if (dots == std::string::npos) throw DomainError("--constellations expects K0..K1");
    std::int64_t k0 = 0;
    std::int64_t k1 = 0;
    try {
      k0 = std::stoll(constellations.substr(0, dots));
      k1 = std::stoll(constellations.substr(dots + 2));
    } catch (const std::exception&) {
      throw DomainError("--constellations expects K0..K1");
    }
    std::optional<CircleAngle> theta;
    if (!angles.empty()) theta = angles.front();
    svg = render_constellations(params, k0, k1, theta);
  } else {
    RenderOptions options;
    options.hull = hull;
    options.support_lines = lines;
    options.thetas = angles;
    options.point_radius = radius;
    options.budget = point_budget();
    svg = render_limit_set(params, depth, options);
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open '" + path + "' for writing");
  file << svg;
  out << "wrote " << path << " (" << svg.size() << " bytes)\n";
  return 0;
}

struct ScanRow {
  double r;
  CircleAngle phi;
  std::int64_t b;
  std::int64_t faces;
  bool interval;
  double bound;
  bool satisfied;
};

int cmd_scan(int n, const std::string& r_range, const std::string& phi_list, std::ostream& out) {
  const auto rs = parse_range(r_range);
  const auto phis = parse_angle_list(phi_list);
  for (const auto& phi : phis) {
    if (!phi.is_exact()) throw RequiresExactAngle("scan requires exact rational angles, got " + phi.to_string());
  }
  for (double r : rs) IfsParams(n, r, CircleAngle());  // validate up front

  const std::size_t total = rs.size() * phis.size();
  std::vector<std::optional<ScanRow>> rows(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const RationalIfsParams params(IfsParams(n, rs[i / phis.size()], phis[i % phis.size()]));
      const ConvexityBound bound = convexity_necessary(params);
      rows[i] = ScanRow{params.r(),      params.base().phi(),     params.b(),
                        n * params.b(),  face_is_interval(params), bound.bound,
                        bound.satisfied};
    }
  };
  {
    const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x->r != y->r) return x->r < y->r;
    return x->phi.exact() < y->phi.exact();
  });
  out << "r,phi,b,nb,face_type,convexity_bound,satisfied\n";
  for (const auto& row : rows) {
    out << fmt(row->r, 17) << "," << row->phi.to_string() << "," << row->b << "," << row->faces
        << "," << (row->interval ? "interval" : "cantor") << "," << fmt(row->bound, 17) << ","
        << (row->satisfied ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extreme points and convex hulls of the limit sets of f_j(z) = c z + xi^j", "polyifs"};
  app.require_subcommand(1);

  IfsArgs ifs;
  bool as_json = false;
  bool as_csv = false;
  std::optional<int> depth;
  int depth_value = 0;

  auto* points = app.add_subcommand("points", "enumerate all evaluations of words of a fixed length");
  ifs.add_to(points);
  points->add_option("--depth", depth_value, "word length")->required();
  points->add_flag("--json", as_json, "JSON output");
  points->add_flag("--csv", as_csv, "CSV output (re,im)");

  std::string theta_text;
  double tol = kDefaultTieTolerance;
  std::size_t cap = kDefaultPointCap;
  auto* extreme = app.add_subcommand("extreme", "extreme words and points at one support angle");
  ifs.add_to(extreme);
  extreme->add_option("--theta", theta_text, "support angle: p/q (exact) or a decimal")->required();
  extreme->add_option("--depth", depth, "truncation depth (default: smallest with tail < 1e-9)");
  extreme->add_option("--tol", tol, "tie tolerance in float mode")->capture_default_str();
  extreme->add_option("--cap", cap, "maximum number of points to evaluate")->capture_default_str();
  extreme->add_flag("--json", as_json, "JSON output");

  auto* theta = app.add_subcommand("theta", "face normals of the hull (exact phi only)");
  ifs.add_to(theta);
  theta->add_flag("--json", as_json, "JSON output");

  auto* hull = app.add_subcommand("hull", "exact convex hull polygon (exact phi only)");
  ifs.add_to(hull);
  hull->add_flag("--json", as_json, "JSON output");
  hull->add_flag("--csv", as_csv, "vertices as CSV (re,im)");

  auto* convex = app.add_subcommand("check-convex", "necessary condition for convexity (exact phi only)");
  ifs.add_to(convex);
  convex->add_flag("--json", as_json, "JSON output");

  int grid = 360;
  int verify_depth = 8;
  auto* check = app.add_subcommand("verify", "cross-check analytic results against a brute-force cloud");
  ifs.add_to(check);
  check->add_option("--depth", verify_depth, "cloud depth")->capture_default_str();
  check->add_option("--grid", grid, "number of uniformly spaced support angles")->capture_default_str();
  check->add_flag("--json", as_json, "JSON output");

  std::string out_path;
  int render_depth = 7;
  bool with_hull = false;
  bool with_lines = false;
  std::string constellations;
  std::vector<std::string> render_thetas;
  std::optional<double> radius;
  auto* render = app.add_subcommand("render", "write an SVG figure");
  ifs.add_to(render);
  render->add_option("--out", out_path, "output SVG path")->required();
  render->add_option("--depth", render_depth, "cloud depth")->capture_default_str();
  render->add_flag("--hull", with_hull, "overlay the hull polygon (exact phi only)");
  render->add_flag("--support-lines", with_lines, "draw support lines at every face normal and --theta");
  render->add_option("--constellations", constellations, "draw constellation panels K0..K1 instead");
  render->add_option("--theta", render_thetas, "extra support angle(s); highlights digits in panels");
  render->add_option("--radius", radius, "point radius in plot units");

  int scan_n = 0;
  std::string r_range;
  std::string phi_list;
  auto* scan = app.add_subcommand("scan", "CSV table of period, face type and convexity bound");
  scan->add_option("--n", scan_n, "number of maps")->required();
  scan->add_option("--r-range", r_range, "A:B:STEP")->required();
  scan->add_option("--phi-list", phi_list, "comma-separated exact angles, e.g. 0/1,1/4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*points) return cmd_points(ifs, depth_value, as_json, as_csv, out);
    if (*extreme) return cmd_extreme(ifs, theta_text, depth, tol, cap, as_json, out);
    if (*theta) return cmd_theta(ifs, as_json, out);
    if (*hull) return cmd_hull(ifs, as_json, as_csv, out);
    if (*convex) return cmd_check_convex(ifs, as_json, out);
    if (*check) return cmd_verify(ifs, verify_depth, grid, as_json, out);
    if (*render) {
      return cmd_render(ifs, out_path, render_depth, with_hull, with_lines, constellations,
                        render_thetas, radius, out);
    }
    if (*scan) return cmd_scan(scan_n, r_range, phi_list, out);
  } catch (const RequiresExactAngle& e) {
    err << "error: " << e.what() << " (pass --phi as p/q)\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const AmbiguousTie& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const StructuralError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace polyifs::cli
