// Copyright 2026 The Frame Authors
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

#ifndef FRAME_SVG_HPP
#define FRAME_SVG_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "frame/aggregate.hpp"
#include "frame/bench.hpp"
#include "frame/model.hpp"

namespace frame {

/// Static figure of a worst-case analysis: one polyline per attacker
/// envelope, the two summed envelopes as paths, and markers at every
/// worst-case time. Fixed 800x500 viewport, linear axes auto-scaled to the
/// data with a 5% margin.
class PlotBuilder {
 public:
  PlotBuilder(const ChainCase& chain, const AnalysisResult& analysis) {
    for (std::size_t i = 0; i < chain.attackers.size(); ++i) {
      const std::string prefix = "a" + std::to_string(i + 1);
      const SummedEnvelope& win = analysis.winning();
      const SummedEnvelope& other = analysis.achieved_on == SumRole::maximum
                                        ? analysis.e_min
                                        : analysis.e_max;
      add_series(prefix + "." + kind_name(win.components[i].kind),
                 vertices_of(win.components[i]), /*is_sum=*/false);
      add_series(prefix + "." + kind_name(other.components[i].kind),
                 vertices_of(other.components[i]), /*is_sum=*/false);
    }
    add_series("emax", master_of(analysis.e_max), /*is_sum=*/true);
    add_series("emin", master_of(analysis.e_min), /*is_sum=*/true);
    for (double t : analysis.t_star_all)
      markers_.push_back({t, analysis.winning().value_at(t)});
  }

  /// Point rows for every drawn line series, one row per vertex.
  std::string to_csv() const {
    std::string out = "series,t,V\n";
    for (const Series& s : series_) {
      for (const Point& pt : s.points) {
        out += s.name;
        out += ',' + format_number(pt.t);
        out += ',' + format_number(pt.v);
        out += '\n';
      }
    }
    return out;
  }

  std::string to_svg() const {
    Bounds bb = bounds();
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
           "height=\"500\" viewBox=\"0 0 800 500\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" "
           "fill=\"white\"/>\n";
    out += "  <rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" +
           px(kPlotW) + "\" height=\"" + px(kPlotH) +
           "\" fill=\"none\" stroke=\"#444444\"/>\n";
    if (bb.vmin < 0.0 && bb.vmax > 0.0) {
      const double y0 = y_px(0.0, bb);
      out += "  <line x1=\"" + px(kLeft) + "\" y1=\"" + px(y0) + "\" x2=\"" +
             px(kLeft + kPlotW) + "\" y2=\"" + px(y0) +
             "\" stroke=\"#bbbbbb\" stroke-dasharray=\"2,3\"/>\n";
    }

    std::size_t color = 0;
    double legend_y = kTop + 14.0;
    for (const Series& s : series_) {
      const std::string stroke = kPalette[color % kPaletteSize];
      const bool dashed = s.name.size() > 6 &&
                          s.name.compare(s.name.size() - 6, 6, ".inner") == 0;
      std::string attrs = "fill=\"none\" stroke=\"" + stroke + "\"";
      if (s.is_sum) attrs += " stroke-width=\"2.5\"";
      if (dashed) attrs += " stroke-dasharray=\"5,4\"";
      if (s.is_sum) {
        std::string d;
        for (std::size_t i = 0; i < s.points.size(); ++i) {
          d += (i == 0 ? "M" : " L");
          d += px(x_px(s.points[i].t, bb)) + " " + px(y_px(s.points[i].v, bb));
        }
        out += "  <path d=\"" + d + "\" " + attrs + "/>\n";
      } else {
        std::string pts;
        for (const Point& pt : s.points) {
          if (!pts.empty()) pts += ' ';
          pts += px(x_px(pt.t, bb)) + "," + px(y_px(pt.v, bb));
        }
        out += "  <polyline points=\"" + pts + "\" " + attrs + "/>\n";
      }
      // legend entry
      const double lx = kLeft + kPlotW + 10.0;
      out += "  <line x1=\"" + px(lx) + "\" y1=\"" + px(legend_y - 4.0) +
             "\" x2=\"" + px(lx + 18.0) + "\" y2=\"" + px(legend_y - 4.0) +
             "\" " + attrs + "/>\n";
      out += "  <text x=\"" + px(lx + 24.0) + "\" y=\"" + px(legend_y) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + s.name +
             "</text>\n";
      legend_y += 16.0;
      ++color;
    }

    for (const Point& mk : markers_) {
      out += "  <circle cx=\"" + px(x_px(mk.t, bb)) + "\" cy=\"" +
             px(y_px(mk.v, bb)) +
             "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" "
             "stroke-width=\"2\"/>\n";
    }

    // axis extent labels
    out += text_label(kLeft, kTop + kPlotH + 16.0, format_number(bb.tmin));
    out += text_label(kLeft + kPlotW - 30.0, kTop + kPlotH + 16.0,
                      format_number(bb.tmax));
    out += text_label(kLeft - 45.0, kTop + kPlotH, format_number(bb.vmin));
    out += text_label(kLeft - 45.0, kTop + 10.0, format_number(bb.vmax));
    out += "</svg>\n";
    return out;
  }

 private:
  struct Point {
    double t;
    double v;
  };
  struct Series {
    std::string name;
    std::vector<Point> points;
    bool is_sum;
  };
  struct Bounds {
    double tmin, tmax, vmin, vmax;
  };

  static constexpr double kLeft = 55.0;
  static constexpr double kTop = 20.0;
  static constexpr double kPlotW = 620.0;
  static constexpr double kPlotH = 440.0;
  static constexpr std::size_t kPaletteSize = 8;
  static constexpr const char* kPalette[kPaletteSize] = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd",
      "#8c564b", "#e377c2", "#17becf", "#7f7f7f"};

  static const char* kind_name(EnvelopeKind kind) {
    return kind == EnvelopeKind::outer ? "outer" : "inner";
  }

  static std::vector<Point> vertices_of(const Envelope& env) {
    std::vector<Point> pts;
    pts.reserve(env.vertices.size());
    for (const Vertex& vx : env.vertices) pts.push_back({vx.t, vx.v});
    return pts;
  }

  static std::vector<Point> master_of(const SummedEnvelope& sum) {
    std::vector<Point> pts;
    pts.reserve(sum.master.size());
    for (const MasterVertex& mv : sum.master) pts.push_back({mv.t, mv.v});
    return pts;
  }

  void add_series(std::string name, std::vector<Point> points, bool is_sum) {
    series_.push_back({std::move(name), std::move(points), is_sum});
  }

  Bounds bounds() const {
    Bounds bb{0.0, 1.0, 0.0, 1.0};
    bool first = true;
    for (const Series& s : series_) {
      for (const Point& pt : s.points) {
        if (first) {
          bb = {pt.t, pt.t, pt.v, pt.v};
          first = false;
        } else {
          bb.tmin = std::min(bb.tmin, pt.t);
          bb.tmax = std::max(bb.tmax, pt.t);
          bb.vmin = std::min(bb.vmin, pt.v);
          bb.vmax = std::max(bb.vmax, pt.v);
        }
      }
    }
    const double tspan = std::max(bb.tmax - bb.tmin, 1e-6);
    const double vspan = std::max(bb.vmax - bb.vmin, 1e-6);
    bb.tmin -= 0.05 * tspan;
    bb.tmax += 0.05 * tspan;
    bb.vmin -= 0.05 * vspan;
    bb.vmax += 0.05 * vspan;
    return bb;
  }

  static double x_px(double t, const Bounds& bb) {
    return kLeft + (t - bb.tmin) / (bb.tmax - bb.tmin) * kPlotW;
  }

  static double y_px(double v, const Bounds& bb) {
    return kTop + (bb.vmax - v) / (bb.vmax - bb.vmin) * kPlotH;
  }

  static std::string px(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
  }

  static std::string text_label(double x, double y, const std::string& text) {
    return "  <text x=\"" + px(x) + "\" y=\"" + px(y) +
           "\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#444444\">" + text + "</text>\n";
  }

  std::vector<Series> series_;
  std::vector<Point> markers_;
};

}  // namespace frame

#endif  // FRAME_SVG_HPP
