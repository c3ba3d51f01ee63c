#pragma once

// SVG plot of walls in the (b, t) half-plane. This is the only place where
// floating point is used, and only for pixel layout.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mumford/stability.hpp"

namespace mumford::cli {

struct PlotWindow {
  double b_min = -3, b_max = 3, t_min = 0, t_max = 3;
};

struct LabeledWall {
  std::string label;
  WallLocus wall;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

inline std::string xml_escape(const std::string& in) {
  std::string out;
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_walls_svg(const std::vector<LabeledWall>& walls, const PlotWindow& w) {
  using detail::fmt;
  constexpr double width = 600, height = 400, margin = 40;
  const double sx = width / (w.b_max - w.b_min);
  const double sy = height / (w.t_max - w.t_min);
  auto px = [&](double b) { return margin + (b - w.b_min) * sx; };
  auto py = [&](double t) { return margin + height - (t - w.t_min) * sy; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width + 2 * margin) + "\" height=\"" +
         fmt(height + 2 * margin) + "\">\n";
  out += "  <defs><clipPath id=\"plot\"><rect x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) + "\" width=\"" +
         fmt(width) + "\" height=\"" + fmt(height) + "\"/></clipPath></defs>\n";
  out += "  <rect x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) + "\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "  <text x=\"" + fmt(margin + width / 2) + "\" y=\"" + fmt(height + 2 * margin - 8) +
         "\" text-anchor=\"middle\" font-size=\"12\">b</text>\n";
  out += "  <text x=\"12\" y=\"" + fmt(margin + height / 2) + "\" font-size=\"12\">t</text>\n";
  out += "  <text x=\"" + fmt(margin) + "\" y=\"" + fmt(height + margin + 14) + "\" font-size=\"10\">" +
         fmt(w.b_min) + "</text>\n";
  out += "  <text x=\"" + fmt(margin + width) + "\" y=\"" + fmt(height + margin + 14) +
         "\" text-anchor=\"end\" font-size=\"10\">" + fmt(w.b_max) + "</text>\n";
  out += "  <g clip-path=\"url(#plot)\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\">\n";
  for (const auto& lw : walls) {
    const WallLocus& wl = lw.wall;
    const std::string label = detail::xml_escape(lw.label);
    if (wl.kind == WallKind::vertical_line) {
      const double b = wl.line_b.get_d();
      out += "    <line x1=\"" + fmt(px(b)) + "\" y1=\"" + fmt(py(w.t_min)) + "\" x2=\"" + fmt(px(b)) + "\" y2=\"" +
             fmt(py(w.t_max)) + "\"><title>" + label + "</title></line>\n";
      out += "    <text x=\"" + fmt(px(b) + 4) + "\" y=\"" + fmt(margin + 14) +
             "\" stroke=\"none\" fill=\"black\" font-size=\"11\">" + label + "</text>\n";
    } else if (wl.kind == WallKind::semicircle) {
      const double c = wl.center.get_d();
      const double r = std::sqrt(wl.radius_sq.get_d());
      out += "    <ellipse cx=\"" + fmt(px(c)) + "\" cy=\"" + fmt(py(0)) + "\" rx=\"" + fmt(r * sx) + "\" ry=\"" +
             fmt(r * sy) + "\"><title>" + label + "</title></ellipse>\n";
      out += "    <text x=\"" + fmt(px(c)) + "\" y=\"" + fmt(py(r) - 4) +
             "\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\" font-size=\"11\">" + label + "</text>\n";
    }
  }
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace mumford::cli
