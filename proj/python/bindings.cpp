#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyifs/error.hpp"
#include "polyifs/extreme_words.hpp"
#include "polyifs/hull_oracle.hpp"
#include "polyifs/rational_structure.hpp"
#include "polyifs/render_svg.hpp"

namespace py = pybind11;
using namespace polyifs;

namespace {

// Angles cross the boundary as "p/q" strings (exact) or floats.
CircleAngle to_angle(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return CircleAngle::parse(obj.cast<std::string>());
  return CircleAngle::from_double(obj.cast<double>());
}

py::object from_angle(const CircleAngle& a) {
  if (a.is_exact()) return py::str(a.exact().to_string());
  return py::float_(a.value());
}

IfsParams params(int n, double r, const py::object& phi) { return IfsParams(n, r, to_angle(phi)); }

py::dict face_dict(const HullFace& f) {
  py::dict d;
  d["theta"] = from_angle(f.theta);
  d["lambda"] = f.face.lambda;
  d["u0"] = std::vector<int>(f.face.u0.digits().begin(), f.face.u0.digits().end());
  d["u1"] = std::vector<int>(f.face.u1.digits().begin(), f.face.u1.digits().end());
  d["endpoints"] = std::vector<Complex>{f.endpoint_lo, f.endpoint_hi};
  d["interval"] = f.is_full_interval;
  return d;
}

}  // namespace

PYBIND11_MODULE(_polyifs, m) {
  m.doc() = "Extreme points and convex hulls of the limit sets of f_j(z) = c z + xi^j";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
  py::register_exception<AmbiguousTie>(m, "AmbiguousTie", PyExc_RuntimeError);

  m.def("evaluate", [](int n, double r, const py::object& phi, const std::vector<int>& word) {
    return evaluate(params(n, r, phi), Word(word));
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("word"));

  m.def("fixed_point", [](int n, double r, const py::object& phi, int digit) {
    return fixed_point(params(n, r, phi), digit);
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("digit"));

  m.def("tail_bound", [](int n, double r, const py::object& phi, int depth) {
    return tail_bound(params(n, r, phi), depth);
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("depth"));

  m.def("enumerate_cloud", [](int n, double r, const py::object& phi, int depth, std::uint64_t budget) {
    const IfsParams p = params(n, r, phi);
    const PointCloud cloud = [&] {
      py::gil_scoped_release release;
      return enumerate_cloud(p, depth, budget);
    }();
    return py::make_tuple(cloud.points, cloud.tail_bound);
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("depth"), py::arg("budget") = kDefaultPointBudget,
     "Returns (points, tail_bound) with points in lexicographic word order.");

  m.def("digit_choices", [](int n, double r, const py::object& phi, const py::object& theta,
                            std::int64_t k, double tol) {
    const IfsParams p = params(n, r, phi);
    return digit_choices(p, SupportQuery(p, to_angle(theta), tol), k).digits();
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("theta"), py::arg("k"),
     py::arg("tol") = kDefaultTieTolerance);

  m.def("support_value", [](int n, double r, const py::object& phi, const py::object& theta,
                            std::optional<int> depth) {
    const IfsParams p = params(n, r, phi);
    const SupportValue s = support_value(p, to_angle(theta), depth.value_or(depth_for_tolerance(p)));
    return py::make_tuple(s.value, s.error_bar);
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("theta"), py::arg("depth") = py::none(),
     "Returns (value, error_bar).");

  m.def("extreme_points", [](int n, double r, const py::object& phi, const py::object& theta,
                             std::optional<int> depth, double tol, std::size_t cap) {
    const IfsParams p = params(n, r, phi);
    const auto e = extreme_points(p, SupportQuery(p, to_angle(theta), tol),
                                  depth.value_or(depth_for_tolerance(p)), cap);
    py::dict d;
    d["classification"] = to_string(e.classification);
    d["points"] = e.points;
    d["tie_steps"] = e.tie_steps;
    d["truncated"] = e.truncated;
    return d;
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("theta"), py::arg("depth") = py::none(),
     py::arg("tol") = kDefaultTieTolerance, py::arg("cap") = kDefaultPointCap);

  m.def("period_b", [](int n, std::int64_t q) {
    const Period p = period_b(n, q);
    return py::make_tuple(p.b, p.a);
  }, py::arg("n"), py::arg("q"), "Returns (b, a).");

  m.def("theta_set", [](int n, double r, const std::string& phi) {
    py::list out;
    for (const auto& t : theta_set(RationalIfsParams(params(n, r, py::str(phi))))) out.append(from_angle(t));
    return out;
  }, py::arg("n"), py::arg("r"), py::arg("phi"));

  m.def("hull_polygon", [](int n, double r, const std::string& phi) {
    const HullPolygon hull = hull_polygon(RationalIfsParams(params(n, r, py::str(phi))));
    py::list faces;
    for (const auto& f : hull.faces) faces.append(face_dict(f));
    py::dict d;
    d["faces"] = faces;
    d["vertices"] = hull.vertices;
    d["degenerate"] = hull.degenerate;
    return d;
  }, py::arg("n"), py::arg("r"), py::arg("phi"));

  m.def("convexity_necessary", [](int n, double r, const std::string& phi) {
    const ConvexityBound b = convexity_necessary(RationalIfsParams(params(n, r, py::str(phi))));
    return py::make_tuple(b.bound, b.satisfied);
  }, py::arg("n"), py::arg("r"), py::arg("phi"), "Returns (bound, satisfied).");

  m.def("face_is_interval", [](int n, double r, const std::string& phi) {
    return face_is_interval(RationalIfsParams(params(n, r, py::str(phi))));
  }, py::arg("n"), py::arg("r"), py::arg("phi"));

  m.def("convex_hull_2d", [](const std::vector<Complex>& points) { return convex_hull_2d(points); },
        py::arg("points"));

  m.def("verify", [](int n, double r, const py::object& phi, int depth, int grid) {
    const IfsParams p = params(n, r, phi);
    const OracleReport report = [&] {
      py::gil_scoped_release release;
      return verify(p, depth, grid);
    }();
    py::dict d;
    d["pass"] = report.pass;
    d["worst_support_diff"] = report.worst_support_diff();
    d["slack_budget"] = report.slack_budget;
    d["support_checks"] = report.support.size();
    if (report.hausdorff) {
      d["hausdorff"] = *report.hausdorff;
      d["hausdorff_slack"] = report.hausdorff_slack;
    }
    return d;
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("depth") = 8, py::arg("grid") = 360);

  m.def("render_limit_set", [](int n, double r, const py::object& phi, int depth, bool hull,
                               bool support_lines, const std::vector<py::object>& thetas) {
    RenderOptions options;
    options.hull = hull;
    options.support_lines = support_lines;
    for (const auto& t : thetas) options.thetas.push_back(to_angle(t));
    return render_limit_set(params(n, r, phi), depth, options);
  }, py::arg("n"), py::arg("r"), py::arg("phi"), py::arg("depth") = 7, py::arg("hull") = false,
     py::arg("support_lines") = false, py::arg("thetas") = std::vector<py::object>{});
}
