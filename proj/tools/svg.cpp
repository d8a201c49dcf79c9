#include "svg.hpp"

#include <algorithm>
#include <cstdio>

#include "andgraph/intersection_model.hpp"

namespace andgraph::cli {

namespace {

constexpr double kPanel = 380;
constexpr double kMargin = 20;
constexpr double kRow = 20;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

// Affine map of [lo, hi] onto [a, a + kPanel].
struct Scale {
  double lo;
  double hi;
  double a;
  double operator()(const Rational& x) const {
    if (hi == lo) return a + kPanel / 2;
    return a + (x.get_d() - lo) / (hi - lo) * kPanel;
  }
};

}  // namespace

std::string render_svg(const Realization& r) {
  const int n = r.order();
  const double rows = kMargin * 2 + kRow * std::max(n, 1);
  const double height = std::max(rows, kPanel + 2 * kMargin);
  const double width = 2 * kPanel + 4 * kMargin;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" font-family=\"monospace\" font-size=\"10\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (n == 0) return out + "</svg>\n";

  double lo = r.interval(1).lo.get_d();
  double hi = r.interval(1).hi.get_d();
  for (VertexId v = 2; v <= n; ++v) {
    lo = std::min(lo, r.interval(v).lo.get_d());
    hi = std::max(hi, r.interval(v).hi.get_d());
  }
  const Scale sx{lo, hi, kMargin};
  out += "<g id=\"intervals\">\n";
  for (VertexId v = 1; v <= n; ++v) {
    const std::string y = num(kMargin + kRow * (v - 0.5));
    out += "<line x1=\"" + num(sx(r.interval(v).lo)) + "\" y1=\"" + y + "\" x2=\"" +
           num(sx(r.interval(v).hi)) + "\" y2=\"" + y + "\" stroke=\"black\"/>\n";
    out += "<circle cx=\"" + num(sx(r.point(v))) + "\" cy=\"" + y + "\" r=\"3\" fill=\"black\"/>\n";
    out += "<text x=\"" + num(sx(r.interval(v).hi) + 4) + "\" y=\"" + y + "\">" + std::to_string(v) +
           "</text>\n";
  }
  out += "</g>\n";

  // Corner boxes [p, R] x [-p, -L] of the first dimension; y grows upward.
  const CornerBoxModel m = to_corner_boxes(r);
  double blo = m.boxes[0].factors[0].y.lo.get_d();
  double bhi = m.boxes[0].factors[0].x.hi.get_d();
  for (const CornerBox& b : m.boxes) {
    const PlanarBox& f = b.factors[0];
    blo = std::min({blo, f.x.lo.get_d(), f.y.lo.get_d()});
    bhi = std::max({bhi, f.x.hi.get_d(), f.y.hi.get_d()});
  }
  const double left = 3 * kMargin + kPanel;
  const Scale bx{blo, bhi, left};
  const Scale by{blo, bhi, 0};
  auto yflip = [&](const Rational& y) { return kMargin + kPanel - by(y); };
  out += "<g id=\"corner-boxes\">\n";
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kPanel) +
         "\" height=\"" + num(kPanel) + "\" fill=\"none\" stroke=\"gray\"/>\n";
  // Diagonal x + y = 0, clipped to the panel.
  const double ya = std::max(blo, -bhi);
  const double yb = std::min(bhi, -blo);
  if (ya <= yb) {
    out += "<line x1=\"" + num(bx(Rational(-ya))) + "\" y1=\"" + num(yflip(Rational(ya))) +
           "\" x2=\"" + num(bx(Rational(-yb))) + "\" y2=\"" + num(yflip(Rational(yb))) +
           "\" stroke=\"gray\" stroke-dasharray=\"4 2\"/>\n";
  }
  for (std::size_t k = 0; k < m.boxes.size(); ++k) {
    const PlanarBox& f = m.boxes[k].factors[0];
    const double x = bx(f.x.lo);
    const double y = yflip(f.y.hi);
    out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(bx(f.x.hi) - x) +
           "\" height=\"" + num(yflip(f.y.lo) - y) + "\" fill=\"none\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(bx(f.x.lo) + 2) + "\" y=\"" + num(yflip(f.y.lo) - 2) + "\">" +
           std::to_string(k + 1) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace andgraph::cli
