#include "ccert/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ccert/body_ops.hpp"
#include "ccert/lp.hpp"

namespace ccert {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// Exact counterclockwise order around a center.
void sort_ccw(std::vector<Vec>& pts, const Vec& center) {
  auto half = [&](const Vec& p) {
    Rat dx = p[0] - center[0], dy = p[1] - center[1];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cross = (a[0] - center[0]) * (b[1] - center[1]) -
                (a[1] - center[1]) * (b[0] - center[0]);
    if (cross != 0) return cross > 0;
    return a < b;
  });
}

}  // namespace

std::string render_svg(const Family& family, const SvgOverlays& overlays) {
  if (family.dimension != 2)
    throw std::invalid_argument("render_svg: planar families only");

  // Gather every coordinate that should be visible.
  std::vector<Vec> pool;
  for (const ConvexBody& body : family.bodies) {
    for (Vec& v : vertices(body)) pool.push_back(std::move(v));
    if (auto p = lp_feasible_point(2, constraints_of(body))) pool.push_back(*p);
  }
  for (const auto& [p, label] : overlays.points) pool.push_back(p);
  for (const auto& path : overlays.paths)
    for (const Vec& p : path) pool.push_back(p);

  Box view{{Rat(-1), Rat(-1)}, {Rat(1), Rat(1)}};
  if (!pool.empty()) {
    view.lo = view.hi = pool[0];
    for (const Vec& p : pool)
      for (int j = 0; j < 2; ++j) {
        view.lo[j] = std::min(view.lo[j], p[j]);
        view.hi[j] = std::max(view.hi[j], p[j]);
      }
  }
  Rat pad = std::max(std::max(Rat(view.hi[0] - view.lo[0]), Rat(view.hi[1] - view.lo[1])), Rat(1)) *
            make_rat(3, 20);
  for (int j = 0; j < 2; ++j) {
    view.lo[j] -= pad;
    view.hi[j] += pad;
  }

  // SVG y grows downward; flip exactly inside the viewBox.
  auto fx = [&](const Rat& x) { return rat_to_decimal(x, 4); };
  auto fy = [&](const Rat& y) { return rat_to_decimal(view.lo[1] + view.hi[1] - y, 4); };
  Rat width = view.hi[0] - view.lo[0], height = view.hi[1] - view.lo[1];
  Rat marker = std::max(width, height) / 120;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fx(view.lo[0]) << " "
      << fy(view.hi[1]) << " " << rat_to_decimal(width, 4) << " "
      << rat_to_decimal(height, 4) << "\">\n";
  svg << "<g id=\"bodies\">\n";
  for (int i = 0; i < family.size(); ++i) {
    const ConvexBody& body = family.bodies[i];
    int color_class = overlays.group_of_body.empty()
                          ? i
                          : overlays.group_of_body[static_cast<std::size_t>(i)];
    const char* color = kPalette[color_class % 10];
    std::vector<Vec> verts = vertices(clip_to_box(body, view));
    if (verts.empty()) continue;
    if (verts.size() == 1) {
      svg << "<circle cx=\"" << fx(verts[0][0]) << "\" cy=\"" << fy(verts[0][1])
          << "\" r=\"" << rat_to_decimal(marker, 4) << "\" fill=\"" << color << "\"/>\n";
    } else if (verts.size() == 2) {
      svg << "<line x1=\"" << fx(verts[0][0]) << "\" y1=\"" << fy(verts[0][1])
          << "\" x2=\"" << fx(verts[1][0]) << "\" y2=\"" << fy(verts[1][1])
          << "\" stroke=\"" << color << "\" stroke-width=\""
          << rat_to_decimal(marker / 2, 4) << "\"/>\n";
    } else {
      Vec center = zero_vec(2);
      for (const Vec& v : verts) center = add(center, v);
      center = scale(center, make_rat(1, static_cast<long>(verts.size())));
      sort_ccw(verts, center);
      svg << "<polygon points=\"";
      for (std::size_t v = 0; v < verts.size(); ++v) {
        if (v) svg << " ";
        svg << fx(verts[v][0]) << "," << fy(verts[v][1]);
      }
      svg << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color
          << "\" stroke-width=\"" << rat_to_decimal(marker / 3, 4) << "\"/>\n";
    }
    Vec anchor = verts[0];
    svg << "<text x=\"" << fx(anchor[0]) << "\" y=\"" << fy(anchor[1])
        << "\" font-size=\"" << rat_to_decimal(marker * 4, 4) << "\" fill=\"" << color
        << "\">" << body.name << "</text>\n";
  }
  svg << "</g>\n<g id=\"overlays\">\n";
  for (const auto& path : overlays.paths) {
    if (path.empty()) continue;
    svg << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\""
        << rat_to_decimal(marker / 2, 4) << "\" stroke-dasharray=\""
        << rat_to_decimal(marker, 4) << "\" points=\"";
    for (std::size_t v = 0; v < path.size(); ++v) {
      if (v) svg << " ";
      svg << fx(path[v][0]) << "," << fy(path[v][1]);
    }
    svg << "\"/>\n";
  }
  for (const auto& [p, label] : overlays.points) {
    svg << "<circle cx=\"" << fx(p[0]) << "\" cy=\"" << fy(p[1]) << "\" r=\""
        << rat_to_decimal(marker * 2, 4) << "\" fill=\"#000000\"/>\n";
    if (!label.empty())
      svg << "<text x=\"" << fx(p[0] + marker * 3) << "\" y=\"" << fy(p[1])
          << "\" font-size=\"" << rat_to_decimal(marker * 4, 4) << "\">" << label
          << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace ccert
