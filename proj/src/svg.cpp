#include "lpbilliards/svg.hpp"

#include "lpbilliards/classify.hpp"
#include "lpbilliards/format.hpp"
#include "lpbilliards/functional.hpp"
#include "lpbilliards/identity.hpp"

namespace lpb {

namespace {

constexpr int kBoundarySegments = 1024;

// Emit a point in SVG coordinates (y axis flipped so +y points up).
std::string svg_xy(const Point2& point) {
  return format_double(point.x) + " " + format_double(-point.y);
}

}  // namespace

std::string orbit_svg(const BoundarySpec& spec, const Eigen::VectorXd& theta) {
  validate_spec(spec);
  validate_theta(theta);
  const int n = static_cast<int>(theta.size());

  // Label data: signature of the Hessian at theta and the rotation number of
  // its canonical form (for a certified orbit these match the stored record).
  const FunctionalEval eval = evaluate(spec, theta);
  const MorseSignature sig = morse_signature(eval.hessian);
  const RotationNumber rot = rotation_number(canonicalize(theta).theta);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
      "viewBox=\"-1.15 -1.15 2.3 2.3\">\n";

  // Boundary polyline: kBoundarySegments + 1 sample points, first == last
  // (SVG point lists accept whitespace-separated coordinates).
  svg += "  <polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"0.008\" "
         "points=\"";
  for (int k = 0; k <= kBoundarySegments; ++k) {
    const double t =
        static_cast<double>(k % kBoundarySegments) / kBoundarySegments;
    if (k > 0) svg += " ";
    svg += svg_xy(boundary_point(spec, t));
  }
  svg += "\"/>\n";

  // The orbit: exactly one closed path.
  svg += "  <path fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"0.012\" d=\"";
  for (int i = 0; i < n; ++i) {
    svg += (i == 0 ? "M " : " L ");
    svg += svg_xy(boundary_point(spec, theta[i]));
  }
  svg += " Z\"/>\n";

  // Vertex marks.
  for (int i = 0; i < n; ++i) {
    const Point2 v = boundary_point(spec, theta[i]);
    svg += "  <circle cx=\"" + format_double(v.x) + "\" cy=\"" +
           format_double(-v.y) + "\" r=\"0.02\" fill=\"#d62728\"/>\n";
  }

  // Label: signature and rotation, plus run context.
  svg += "  <text x=\"0\" y=\"-1.06\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"0.07\" fill=\"#222222\">";
  svg += "(" + std::to_string(sig.n_plus) + "," + std::to_string(sig.n_minus) +
         "," + std::to_string(sig.n_zero) + "), " +
         std::to_string(rot.num) + "/" + std::to_string(rot.den);
  svg += " | p=" + format_p(spec.p) + " N=" + std::to_string(n) +
         " perimeter=" + format_double(eval.value);
  svg += "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace lpb
