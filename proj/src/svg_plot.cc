// Copyright 2026 The privnet-cpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privnet/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace privnet {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b",
                                   "#e377c2", "#7f7f7f"};

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double Map(double v, double pixel_lo, double pixel_hi) const {
    const double x = log ? std::log10(v) : v;
    const double a = log ? std::log10(lo) : lo;
    const double b = log ? std::log10(hi) : hi;
    const double frac = b > a ? (x - a) / (b - a) : 0.5;
    return pixel_lo + frac * (pixel_hi - pixel_lo);
  }
};

}  // namespace

std::string RenderLinePlot(const std::vector<PlotSeries>& series,
                           const PlotOptions& options) {
  Axis x_axis{std::numeric_limits<double>::infinity(),
              -std::numeric_limits<double>::infinity(), options.log_x};
  Axis y_axis{std::numeric_limits<double>::infinity(),
              -std::numeric_limits<double>::infinity(), false};
  for (const PlotSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (options.log_x && x <= 0.0) continue;
      x_axis.lo = std::min(x_axis.lo, x);
      x_axis.hi = std::max(x_axis.hi, x);
      y_axis.lo = std::min(y_axis.lo, y);
      y_axis.hi = std::max(y_axis.hi, y);
    }
  }
  if (!(x_axis.lo <= x_axis.hi)) x_axis = {1.0, 10.0, options.log_x};
  if (options.y_lo < options.y_hi) {
    y_axis.lo = options.y_lo;
    y_axis.hi = options.y_hi;
  } else if (!(y_axis.lo <= y_axis.hi)) {
    y_axis = {0.0, 1.0, false};
  }

  const double plot_right = kWidth - kRight;
  const double plot_bottom = kHeight - kBottom;
  std::string svg = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
      "viewBox=\"0 0 %d %d\" font-family=\"sans-serif\" font-size=\"12\">\n",
      static_cast<int>(kWidth), static_cast<int>(kHeight),
      static_cast<int>(kWidth), static_cast<int>(kHeight));
  absl::StrAppend(&svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  absl::StrAppendFormat(
      &svg, "<text x=\"%.1f\" y=\"24\" text-anchor=\"middle\" "
            "font-size=\"15\">%s</text>\n",
      (kLeft + plot_right) / 2, Escape(options.title));
  absl::StrAppendFormat(
      &svg, "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
            "fill=\"none\" stroke=\"black\"/>\n",
      kLeft, kTop, plot_right - kLeft, plot_bottom - kTop);

  // Ticks at the distinct x values (at most 12) and at five y levels.
  std::vector<double> xs;
  for (const PlotSeries& s : series) {
    for (const auto& p : s.points) {
      if (std::isfinite(p.first) && (!options.log_x || p.first > 0.0)) {
        xs.push_back(p.first);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const size_t stride = xs.size() > 12 ? (xs.size() + 11) / 12 : 1;
  for (size_t k = 0; k < xs.size(); k += stride) {
    const double px = x_axis.Map(xs[k], kLeft, plot_right);
    absl::StrAppendFormat(
        &svg, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
              "stroke=\"black\"/>\n<text x=\"%.1f\" y=\"%.1f\" "
              "text-anchor=\"middle\">%g</text>\n",
        px, plot_bottom, px, plot_bottom + 5, px, plot_bottom + 18, xs[k]);
  }
  for (int k = 0; k <= 4; ++k) {
    const double v = y_axis.lo + (y_axis.hi - y_axis.lo) * k / 4.0;
    const double py = y_axis.Map(v, plot_bottom, kTop);
    absl::StrAppendFormat(
        &svg, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
              "stroke=\"#dddddd\"/>\n<text x=\"%.1f\" y=\"%.1f\" "
              "text-anchor=\"end\">%g</text>\n",
        kLeft, py, plot_right, py, kLeft - 6, py + 4, v);
  }
  absl::StrAppendFormat(
      &svg, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%s</text>\n",
      (kLeft + plot_right) / 2, kHeight - 18, Escape(options.x_label));
  absl::StrAppendFormat(
      &svg, "<text x=\"18\" y=\"%.1f\" text-anchor=\"middle\" "
            "transform=\"rotate(-90 18 %.1f)\">%s</text>\n",
      (kTop + plot_bottom) / 2, (kTop + plot_bottom) / 2,
      Escape(options.y_label));

  for (size_t k = 0; k < series.size(); ++k) {
    const char* color = kColors[k % std::size(kColors)];
    std::string points;
    std::string markers;
    for (const auto& [x, y] : series[k].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (options.log_x && x <= 0.0) continue;
      const double px = x_axis.Map(x, kLeft, plot_right);
      const double py = y_axis.Map(y, plot_bottom, kTop);
      absl::StrAppendFormat(&points, "%s%.2f,%.2f", points.empty() ? "" : " ",
                            px, py);
      absl::StrAppendFormat(
          &markers, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n",
          px, py, color);
    }
    absl::StrAppendFormat(
        &svg, "<polyline points=\"%s\" fill=\"none\" stroke=\"%s\" "
              "stroke-width=\"2\"/>\n%s",
        points, color, markers);
    const double ly = kTop + 16 + 18 * static_cast<double>(k);
    absl::StrAppendFormat(
        &svg, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
              "stroke=\"%s\" stroke-width=\"2\"/>\n<text x=\"%.1f\" "
              "y=\"%.1f\">%s</text>\n",
        plot_right + 12, ly, plot_right + 32, ly, color, plot_right + 38,
        ly + 4, Escape(series[k].label));
  }
  absl::StrAppend(&svg, "</svg>\n");
  return svg;
}

}  // namespace privnet
