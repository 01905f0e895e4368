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

#include "cli/svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace muc::cli {
namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 160.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 48.0;

std::string EscapeXml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Num(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

void WriteSvgPlot(std::ostream& out, const PlotSpec& spec) {
  Range xr;
  Range yr;
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      xr.Include(x);
      yr.Include(y);
    }
  }
  for (const auto& ref : spec.references) yr.Include(ref.y);
  xr.Finish();
  yr.Finish();

  const double w = spec.width;
  const double h = spec.height;
  const double plot_w = w - kMarginLeft - kMarginRight;
  const double plot_h = h - kMarginTop - kMarginBottom;
  auto sx = [&](double x) {
    return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  auto sy = [&](double y) {
    return kMarginTop + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * plot_h;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" font-family=\"sans-serif\" "
      << "font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-size=\"14\">" << EscapeXml(spec.title) << "</text>\n";

  const double x0 = kMarginLeft;
  const double y0 = kMarginTop + plot_h;
  out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + plot_w
      << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << x0 << "\" y1=\"" << kMarginTop << "\" x2=\"" << x0
      << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    out << "<text x=\"" << sx(fx) << "\" y=\"" << y0 + 16
        << "\" text-anchor=\"middle\">" << Num(fx) << "</text>\n";
    out << "<text x=\"" << x0 - 6 << "\" y=\"" << sy(fy) + 4
        << "\" text-anchor=\"end\">" << Num(fy) << "</text>\n";
  }
  out << "<text x=\"" << x0 + plot_w / 2 << "\" y=\"" << h - 8
      << "\" text-anchor=\"middle\">" << EscapeXml(spec.x_label)
      << "</text>\n";
  out << "<text transform=\"translate(14," << kMarginTop + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << EscapeXml(spec.y_label)
      << "</text>\n";

  double legend_y = kMarginTop + 8;
  const double legend_x = kMarginLeft + plot_w + 12;
  for (std::size_t i = 0; i < spec.references.size(); ++i) {
    const auto& ref = spec.references[i];
    out << "<line x1=\"" << x0 << "\" y1=\"" << sy(ref.y) << "\" x2=\""
        << x0 + plot_w << "\" y2=\"" << sy(ref.y)
        << "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";
    out << "<text x=\"" << legend_x << "\" y=\"" << legend_y
        << "\" fill=\"gray\">" << EscapeXml(ref.label) << "</text>\n";
    legend_y += 16;
  }
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* color = kPalette[i % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) {
      if (std::isfinite(x) && std::isfinite(y)) {
        out << sx(x) << ',' << sy(y) << ' ';
      }
    }
    out << "\"/>\n";
    out << "<text x=\"" << legend_x << "\" y=\"" << legend_y << "\" fill=\""
        << color << "\">" << EscapeXml(s.label) << "</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
}

}  // namespace muc::cli
