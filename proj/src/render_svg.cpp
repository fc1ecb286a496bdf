#include "polyifs/render_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "polyifs/error.hpp"
#include "polyifs/extreme_words.hpp"
#include "polyifs/rational_structure.hpp"

namespace polyifs {

namespace {

std::string fixed6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  return s == "-0.000000" ? "0.000000" : s;  // tiny negatives round to -0
}

// SVG y grows downward.
std::string xy(Complex z) { return fixed6(z.real()) + "," + fixed6(-z.imag()); }

Complex unit(const CircleAngle& a) { return std::polar(1.0, 2 * std::numbers::pi * a.value()); }

void support_line(std::ostringstream& out, const IfsParams& params, const CircleAngle& theta,
                  double half_length) {
  const int depth = depth_for_tolerance(params, 1e-9);
  const double h = support_value(params, theta, depth).value;
  const Complex normal = unit(theta);
  const Complex foot = h * normal;
  const Complex along = normal * Complex(0.0, 1.0);
  const Complex a = foot - half_length * along;
  const Complex b = foot + half_length * along;
  out << "<line class=\"support\" data-theta=\"" << theta.to_string() << "\" x1=\""
      << fixed6(a.real()) << "\" y1=\"" << fixed6(-a.imag()) << "\" x2=\"" << fixed6(b.real())
      << "\" y2=\"" << fixed6(-b.imag()) << "\"/>\n";
}

}  // namespace

std::string render_limit_set(const IfsParams& params, int depth, const RenderOptions& options) {
  const PointCloud cloud = enumerate_cloud(params, depth, options.budget);
  const double extent = 1.05 / (1.0 - params.r());
  const double width = 2 * extent;
  const double radius = options.point_radius.value_or(
      std::max(0.002 * width, width * std::pow(params.r(), depth)));
  const double stroke = 0.002 * width;

  std::optional<RationalIfsParams> rational;
  if ((options.hull || options.support_lines) && params.phi().is_exact()) rational.emplace(params);
  if (options.hull && !rational) {
    throw RequiresExactAngle("hull overlay requires an exact rational phi");
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed6(-extent) << " "
      << fixed6(-extent) << " " << fixed6(width) << " " << fixed6(width)
      << "\" width=\"800\" height=\"800\">\n";
  out << "<title>n=" << params.n() << " r=" << fixed6(params.r())
      << " phi=" << params.phi().to_string() << " depth=" << depth << "</title>\n";
  out << "<style>.support{stroke:#1f5fbf;stroke-width:" << fixed6(stroke)
      << "}.hull{fill:none;stroke:#c0392b;stroke-width:" << fixed6(stroke) << "}</style>\n";
  out << "<rect x=\"" << fixed6(-extent) << "\" y=\"" << fixed6(-extent) << "\" width=\""
      << fixed6(width) << "\" height=\"" << fixed6(width) << "\" fill=\"white\"/>\n";

  out << "<g class=\"cloud\" fill=\"black\">\n";
  const std::string r_attr = fixed6(radius);
  for (const Complex& p : cloud.points) {
    out << "<circle cx=\"" << fixed6(p.real()) << "\" cy=\"" << fixed6(-p.imag()) << "\" r=\""
        << r_attr << "\"/>\n";
  }
  out << "</g>\n";

  if (options.hull) {
    const HullPolygon hull = hull_polygon(*rational);
    out << "<polygon class=\"hull\" points=\"";
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
      out << (i ? " " : "") << xy(hull.vertices[i]);
    }
    out << "\"/>\n";
  }

  if (options.support_lines) {
    out << "<g class=\"support-lines\">\n";
    if (rational) {
      for (const auto& theta : theta_set(*rational)) support_line(out, params, theta, width);
    }
    for (const auto& theta : options.thetas) support_line(out, params, theta, width);
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_constellations(const IfsParams& params, std::int64_t k_first,
                                  std::int64_t k_last, const std::optional<CircleAngle>& theta) {
  if (k_first < 0 || k_last < k_first) throw DomainError("invalid constellation range");
  const std::int64_t panels = k_last - k_first + 1;
  constexpr double kPanel = 2.6;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed6(kPanel * panels)
      << " " << fixed6(kPanel + 0.4) << "\" width=\"" << 160 * panels << "\" height=\"185\">\n";
  out << "<style>.root{stroke:#555;stroke-width:0.02}.chosen{stroke:#c0392b;stroke-width:0.05}"
         ".theta{stroke:#1f5fbf;stroke-width:0.03;stroke-dasharray:0.08 0.05}"
         "text{font-size:0.22px;font-family:sans-serif}</style>\n";

  std::optional<SupportQuery> query;
  if (theta) query.emplace(params, *theta);

  for (std::int64_t k = k_first; k <= k_last; ++k) {
    const double cx = kPanel * static_cast<double>(k - k_first) + kPanel / 2;
    const double cy = kPanel / 2;
    const Complex centre(cx, -cy);
    std::vector<int> chosen;
    if (query) chosen = digit_choices(params, *query, k).digits();

    out << "<g class=\"panel\" data-k=\"" << k << "\">\n";
    out << "<circle cx=\"" << fixed6(cx) << "\" cy=\"" << fixed6(cy)
        << "\" r=\"1.000000\" fill=\"none\" stroke=\"#ddd\" stroke-width=\"0.01\"/>\n";
    const auto angles = constellation(params, k);
    for (int j = 0; j < params.n(); ++j) {
      const bool hit = std::find(chosen.begin(), chosen.end(), j) != chosen.end();
      const Complex tip = centre + unit(angles[j]);
      out << "<line class=\"" << (hit ? "chosen" : "root") << "\" data-digit=\"" << j
          << "\" x1=\"" << fixed6(cx) << "\" y1=\"" << fixed6(cy) << "\" x2=\""
          << fixed6(tip.real()) << "\" y2=\"" << fixed6(-tip.imag()) << "\"/>\n";
    }
    if (theta) {
      const Complex tip = centre + 1.15 * unit(*theta);
      out << "<line class=\"theta\" x1=\"" << fixed6(cx) << "\" y1=\"" << fixed6(cy)
          << "\" x2=\"" << fixed6(tip.real()) << "\" y2=\"" << fixed6(-tip.imag()) << "\"/>\n";
    }
    out << "<text x=\"" << fixed6(cx - 1.1) << "\" y=\"" << fixed6(kPanel + 0.25) << "\">k=" << k
        << " |c|^k=" << fixed6(std::pow(params.r(), static_cast<double>(k))) << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polyifs
