// Copyright 2026 The Authors.
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

#ifndef MUC_TOOLS_CLI_SVG_H_
#define MUC_TOOLS_CLI_SVG_H_

// Minimal static line plots: axes, tick labels, one polyline per series and
// optional dashed horizontal reference lines.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace muc::cli {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct ReferenceLine {
  std::string label;
  double y = 0.0;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<ReferenceLine> references;
  int width = 720;
  int height = 420;
};

void WriteSvgPlot(std::ostream& out, const PlotSpec& spec);

}  // namespace muc::cli

#endif  // MUC_TOOLS_CLI_SVG_H_
