#include "numrange/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace numrange::plot {

namespace {

constexpr double kCanvas = 720.0;
constexpr double kMargin = 48.0;

struct Frame {
  double scale;

  double x(double mx) const { return kCanvas / 2 + scale * mx; }
  double y(double my) const { return kCanvas / 2 - scale * my; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void polyline(std::ostringstream& out, const Frame& f,
              const std::vector<Vec2<double>>& pts, const char* style,
              bool close) {
  out << "  <path d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i ? " L " : "M ") << num(f.x(pts[i].x())) << ' '
        << num(f.y(pts[i].y()));
  }
  if (close) out << " Z";
  out << "\" " << style << "/>\n";
}

void circle(std::ostringstream& out, const Frame& f, double radius,
            const char* style) {
  out << "  <circle cx=\"" << num(kCanvas / 2) << "\" cy=\"" << num(kCanvas / 2)
      << "\" r=\"" << num(f.scale * radius) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const EnclosureRegion<double>& region,
                       const FovSample<double>& sample,
                       const BoundReport<double>& report) {
  double extent = std::max({report.classical, max_radius(region),
                            sample.oracle_radius, 1e-30});
  Frame f{(kCanvas / 2 - kMargin) / (1.05 * extent)};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' '
      << kCanvas << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <line x1=\"0\" y1=\"" << num(kCanvas / 2) << "\" x2=\"" << kCanvas
      << "\" y2=\"" << num(kCanvas / 2)
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << num(kCanvas / 2) << "\" y1=\"0\" x2=\""
      << num(kCanvas / 2) << "\" y2=\"" << kCanvas
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  // Shaded numerical range: convex hull of every sampled point.
  std::vector<Vec2<double>> cloud;
  cloud.reserve(sample.boundary.size() + sample.interior.size());
  for (const auto& b : sample.boundary) cloud.push_back(b.point);
  for (const auto& p : sample.interior) cloud.push_back(p);
  if (!cloud.empty()) {
    std::vector<Vec2<double>> hull = convex_hull(std::move(cloud));
    if (hull.size() >= 3) {
      polyline(out, f, hull, "fill=\"#c7d3e8\" stroke=\"none\"", true);
    } else if (hull.size() == 2) {
      polyline(out, f, hull, "fill=\"none\" stroke=\"#c7d3e8\" stroke-width=\"3\"",
               false);
    }
  }

  circle(out, f, report.classical,
         "fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"");
  circle(out, f, report.kittaneh_power,
         "fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"9 6\"");
  circle(out, f, report.kittaneh_mean,
         "fill=\"none\" stroke=\"#5a5a5a\" stroke-width=\"1.5\"");

  if (const auto* seg = std::get_if<Segment<double>>(&region)) {
    std::vector<Vec2<double>> ends = {-seg->endpoint, seg->endpoint};
    polyline(out, f, ends,
             "fill=\"none\" stroke=\"#b03030\" stroke-width=\"2.5\"", false);
  } else {
    const auto& poly = std::get<ConvexPolygon<double>>(region);
    polyline(out, f, poly.vertices,
             "fill=\"none\" stroke=\"#b03030\" stroke-width=\"2\"", true);
  }

  const char* labels[3] = {"classical norm bound", "power bound (dashed)",
                           "mean bound"};
  const char* colors[3] = {"#000000", "#000000", "#5a5a5a"};
  for (int i = 0; i < 3; ++i) {
    out << "  <text x=\"12\" y=\"" << 20 + 18 * i
        << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"" << colors[i]
        << "\">" << labels[i] << "</text>\n";
  }
  out << "  <text x=\"12\" y=\"74\" font-family=\"sans-serif\" font-size=\"13\" "
         "fill=\"#b03030\">polygon enclosure</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace numrange::plot
