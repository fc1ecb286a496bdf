#include "polyifs/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "polyifs/error.hpp"

namespace polyifs {

namespace {

json point(Complex z) { return json::array({z.real(), z.imag()}); }

Complex point_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json points(const std::vector<Complex>& zs) {
  json out = json::array();
  for (const Complex& z : zs) out.push_back(point(z));
  return out;
}

json digits(const Word& w) { return json(std::vector<int>(w.digits().begin(), w.digits().end())); }

}  // namespace

json angle_to_json(const CircleAngle& angle) {
  if (angle.is_exact()) return angle.exact().to_string();
  return angle.value();
}

CircleAngle angle_from_json(const json& j) {
  if (j.is_string()) return CircleAngle::parse(j.get<std::string>());
  if (j.is_number()) return CircleAngle::from_double(j.get<double>());
  throw DomainError("angle must be a \"p/q\" string or a number");
}

std::string cloud_to_csv(const PointCloud& cloud) {
  std::string out = "re,im\n";
  out.reserve(out.size() + cloud.points.size() * 48);
  char buf[96];
  for (const Complex& p : cloud.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.real(), p.imag());
    out += buf;
  }
  return out;
}

json cloud_to_json(const PointCloud& cloud) {
  return {{"n", cloud.params.n()},
          {"r", cloud.params.r()},
          {"phi", angle_to_json(cloud.params.phi())},
          {"depth", cloud.depth},
          {"tail_bound", cloud.tail_bound},
          {"points", points(cloud.points)}};
}

PointCloud cloud_from_json(const json& j) {
  IfsParams params(j.at("n").get<int>(), j.at("r").get<double>(), angle_from_json(j.at("phi")));
  PointCloud cloud{params, j.at("depth").get<int>(), j.at("tail_bound").get<double>(), {}};
  for (const auto& p : j.at("points")) cloud.points.push_back(point_from(p));
  return cloud;
}

json extreme_to_json(const CircleAngle& theta, const ExtremePoints& extreme,
                     const SupportValue& support) {
  json choices = json::array();
  for (const auto& c : extreme.word_set.choices) choices.push_back(c.digits());
  json out{{"theta", angle_to_json(theta)},
           {"classification", to_string(extreme.classification)},
           {"choices", std::move(choices)},
           {"points", points(extreme.points)},
           {"support_value", support.value},
           {"error_bar", support.error_bar},
           {"tie_steps", extreme.tie_steps},
           {"truncated", extreme.truncated}};
  if (extreme.word_set.period_hint) out["period_hint"] = *extreme.word_set.period_hint;
  return out;
}

json hull_to_json(const RationalIfsParams& params, const HullPolygon& hull) {
  json thetas = json::array();
  json faces = json::array();
  for (const auto& face : hull.faces) {
    thetas.push_back(angle_to_json(face.theta));
    faces.push_back({{"theta", angle_to_json(face.theta)},
                     {"lambda", face.face.lambda},
                     {"u0", digits(face.face.u0)},
                     {"u1", digits(face.face.u1)},
                     {"endpoints", json::array({point(face.endpoint_lo), point(face.endpoint_hi)})},
                     {"interval", face.is_full_interval}});
  }
  return {{"n", params.n()},
          {"r", params.r()},
          {"phi", angle_to_json(params.base().phi())},
          {"b", params.b()},
          {"a", params.a()},
          {"theta", std::move(thetas)},
          {"faces", std::move(faces)},
          {"vertices", points(hull.vertices)},
          {"convexity_bound", convexity_necessary(params).bound},
          {"degenerate", hull.degenerate}};
}

std::vector<std::string> validate_hull_json(const json& j) {
  std::vector<std::string> errors;
  try {
    const int n = j.at("n").get<int>();
    const double r = j.at("r").get<double>();
    const auto b = j.at("b").get<std::int64_t>();
    const auto& faces = j.at("faces");
    const auto count = static_cast<std::size_t>(n * b);
    if (faces.size() != count) {
      errors.push_back("expected " + std::to_string(count) + " faces, found " +
                       std::to_string(faces.size()));
    }
    if (j.at("theta").size() != faces.size()) errors.push_back("theta list and faces differ in size");
    if (j.at("degenerate").get<bool>() != (count == 2)) errors.push_back("degenerate flag mismatch");
    const double lambda = std::pow(r, static_cast<double>(b));
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const auto& face = faces[i];
      const auto& next = faces[(i + 1) % faces.size()];
      const CircleAngle theta = angle_from_json(face.at("theta"));
      if (i + 1 < faces.size() && !(theta.value() < angle_from_json(next.at("theta")).value())) {
        errors.push_back("face normals not ascending at face " + std::to_string(i));
      }
      if (std::abs(face.at("lambda").get<double>() - lambda) > 1e-12 * std::max(1.0, lambda)) {
        errors.push_back("face " + std::to_string(i) + " lambda differs from r^b");
      }
      if (face.at("u0").size() != static_cast<std::size_t>(b) || face.at("u1").size() != static_cast<std::size_t>(b)) {
        errors.push_back("face " + std::to_string(i) + " block words are not of length b");
      }
      if (face.at("endpoints").size() != 2) {
        errors.push_back("face " + std::to_string(i) + " does not have two endpoints");
        continue;
      }
      const Complex hi = point_from(face.at("endpoints").at(1));
      const Complex lo_next = point_from(next.at("endpoints").at(0));
      if (std::abs(hi - lo_next) > 1e-9) {
        errors.push_back("faces " + std::to_string(i) + " and next do not share an endpoint");
      }
      if (face.at("interval").get<bool>() != (lambda >= 0.5)) {
        errors.push_back("face " + std::to_string(i) + " interval flag mismatch");
      }
    }
    std::vector<Complex> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(point_from(v));
    if (vertices.size() != faces.size()) errors.push_back("vertex count differs from face count");
    const Complex xi = std::polar(1.0, 2 * std::numbers::pi / n);
    for (const Complex& v : vertices) {
      double best = INFINITY;
      for (const Complex& w : vertices) best = std::min(best, std::abs(xi * v - w));
      if (best > 1e-9) {
        errors.push_back("vertex set is not invariant under rotation by xi");
        break;
      }
    }
  } catch (const json::exception& e) {
    errors.push_back(std::string("malformed hull document: ") + e.what());
  }
  return errors;
}

json report_to_json(const OracleReport& report) {
  json worst = json::array();
  for (const auto& s : report.worst_offenders(5)) {
    worst.push_back({{"theta", angle_to_json(s.theta)},
                     {"analytic", s.analytic},
                     {"brute_force", s.brute_force},
                     {"diff", s.diff},
                     {"slack", s.slack}});
  }
  json out{{"pass", report.pass},
           {"support_checks", report.support.size()},
           {"worst_support_diff", report.worst_support_diff()},
           {"slack_budget", report.slack_budget},
           {"worst_offenders", std::move(worst)}};
  if (report.hausdorff) {
    out["hausdorff"] = *report.hausdorff;
    out["hausdorff_slack"] = report.hausdorff_slack;
    out["oracle_hull_vertices"] = report.oracle_hull_vertices;
    out["analytic_vertices"] = report.analytic_vertices;
  }
  return out;
}

}  // namespace polyifs
