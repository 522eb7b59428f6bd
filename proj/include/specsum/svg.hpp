#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace specsum {

/// Minimal self-contained SVG 1.1 line-plot writer: one curve, horizontal
/// marker lines, and highlighted points, no external assets.
struct SvgPlot {
  struct HLine {
    double y = 0.0;
    std::string label;
  };

  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<HLine> hlines;
  std::vector<std::pair<double, double>> points;
  std::string title;

  std::string render() const {
    const int width = 860;
    const int height = 540;
    const int margin = 56;

    double x0 = xs.front();
    double x1 = xs.back();
    // The y window tracks the marker lines and highlighted points, not the
    // curve tails, which blow up at the ends of the x range.
    double y0 = 0.0;
    double y1 = 0.0;
    bool seeded = false;
    auto grow = [&](double v) {
      if (!std::isfinite(v)) return;
      if (!seeded) {
        y0 = y1 = v;
        seeded = true;
      } else {
        y0 = std::min(y0, v);
        y1 = std::max(y1, v);
      }
    };
    for (const HLine& h : hlines) grow(h.y);
    for (const auto& [px, py] : points) grow(py);
    if (!seeded) {
      for (double v : ys) grow(v);
    }
    double pad = 0.8 * (y1 - y0);
    if (pad <= 0.0) pad = 1.0;
    y0 -= pad;
    y1 += pad;

    auto px = [&](double x) {
      return margin + (x - x0) / (x1 - x0) * (width - 2.0 * margin);
    };
    auto py = [&](double y) {
      return height - margin - (y - y0) / (y1 - y0) * (height - 2.0 * margin);
    };
    auto fmt = [](double v) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      return std::string(buf);
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<defs><clipPath id=\"plot\"><rect x=\"" + std::to_string(margin) +
           "\" y=\"" + std::to_string(margin) + "\" width=\"" +
           std::to_string(width - 2 * margin) + "\" height=\"" +
           std::to_string(height - 2 * margin) + "\"/></clipPath></defs>\n";
    out += "<rect x=\"" + std::to_string(margin) + "\" y=\"" +
           std::to_string(margin) + "\" width=\"" +
           std::to_string(width - 2 * margin) + "\" height=\"" +
           std::to_string(height - 2 * margin) +
           "\" fill=\"none\" stroke=\"#333333\"/>\n";
    if (!title.empty()) {
      out += "<text x=\"" + std::to_string(width / 2) +
             "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"16\">" + title + "</text>\n";
    }

    // Axes through the origin when visible.
    if (y0 < 0.0 && y1 > 0.0) {
      out += "<line x1=\"" + fmt(px(x0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" +
             fmt(px(x1)) + "\" y2=\"" + fmt(py(0)) +
             "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    if (x0 < 0.0 && x1 > 0.0) {
      out += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(y0)) + "\" x2=\"" +
             fmt(px(0)) + "\" y2=\"" + fmt(py(y1)) +
             "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }

    // Corner labels for the window.
    out += "<text x=\"" + std::to_string(margin) + "\" y=\"" +
           std::to_string(height - margin + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(x0) +
           "</text>\n";
    out += "<text x=\"" + std::to_string(width - margin) + "\" y=\"" +
           std::to_string(height - margin + 18) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt(x1) + "</text>\n";
    out += "<text x=\"" + std::to_string(margin - 4) + "\" y=\"" +
           std::to_string(height - margin) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt(y0) + "</text>\n";
    out += "<text x=\"" + std::to_string(margin - 4) + "\" y=\"" +
           std::to_string(margin + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt(y1) + "</text>\n";

    for (const HLine& h : hlines) {
      out += "<line x1=\"" + fmt(px(x0)) + "\" y1=\"" + fmt(py(h.y)) +
             "\" x2=\"" + fmt(px(x1)) + "\" y2=\"" + fmt(py(h.y)) +
             "\" stroke=\"#d62728\" stroke-dasharray=\"6,4\" stroke-width=\"1\"/>\n";
      if (!h.label.empty()) {
        out += "<text x=\"" + std::to_string(width - margin - 4) + "\" y=\"" +
               fmt(py(h.y) - 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\" fill=\"#d62728\">" + h.label + "</text>\n";
      }
    }

    out += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
           "clip-path=\"url(#plot)\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(ys[i])) continue;
      out += fmt(px(xs[i])) + "," + fmt(py(ys[i])) + " ";
    }
    out += "\"/>\n";

    for (const auto& [ptx, pty] : points) {
      out += "<circle cx=\"" + fmt(px(ptx)) + "\" cy=\"" + fmt(py(pty)) +
             "\" r=\"3.5\" fill=\"#2ca02c\" clip-path=\"url(#plot)\"/>\n";
    }

    out += "</svg>\n";
    return out;
  }
};

}  // namespace specsum
