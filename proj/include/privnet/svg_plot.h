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

#ifndef PRIVNET_SVG_PLOT_H_
#define PRIVNET_SVG_PLOT_H_

#include <string>
#include <utility>
#include <vector>

namespace privnet {

struct PlotSeries {
  std::string label;
  // (x, y) points in drawing order.
  std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  // Fixed y range; the data range when lo >= hi.
  double y_lo = 0.0;
  double y_hi = 0.0;
};

// Self-contained SVG line chart, one polyline with markers per series.
std::string RenderLinePlot(const std::vector<PlotSeries>& series,
                           const PlotOptions& options);

}  // namespace privnet

#endif  // PRIVNET_SVG_PLOT_H_
