#include "fdroof/svg_chart.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include "fdroof/error.hpp"
#include "fdroof/report.hpp"

namespace fdroof {

void ChartSpec::validate() const {
  if (kind == ChartKind::Roofline) {
    if (roof.size() != 3) throw ValidationError("roofline chart needs a three-vertex roof");
    if (!(roof[0].x < roof[1].x && roof[1].x < roof[2].x) || roof[1].y != roof[2].y ||
        !(roof[0].y < roof[1].y)) {
      throw ValidationError("roof must rise to the ridge and stay flat after it");
    }
  }
  const auto check = [](AxisScale s, double v) {
    if (s == AxisScale::Log && !(v > 0.0)) {
      throw ValidationError("log-scale chart data must be positive");
    }
  };
  for (const auto& v : roof) {
    check(x_scale, v.x);
    check(y_scale, v.y);
  }
  for (const auto& s : series) {
    for (const auto& v : s.points) {
      check(x_scale, v.x);
      check(y_scale, v.y);
    }
  }
  for (const auto& p : points) {
    check(x_scale, p.at.x);
    check(y_scale, p.at.y);
  }
}

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 280.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;
constexpr std::size_t kMaxLabelledPoints = 8;
constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
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

std::string coord(double v) { return fmt::format("{:.2f}", v); }

std::string tick_label(double v) {
  if (v == 0.0) return "0";
  const double mag = std::fabs(v);
  if (mag >= 1e-3 && mag < 1e6) {
    std::string s = fmt::format("{:.4f}", v);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
  }
  return fmt::format("{:.0e}", v);
}

class Axis {
 public:
  Axis(AxisScale scale, double lo, double hi, double pixel_lo, double pixel_hi)
      : scale_(scale), pixel_lo_(pixel_lo), pixel_hi_(pixel_hi) {
    if (scale == AxisScale::Log) {
      lo_ = std::floor(std::log10(lo));
      hi_ = std::ceil(std::log10(hi));
      if (hi_ <= lo_) hi_ = lo_ + 1.0;
      for (double e = lo_; e <= hi_ + 1e-9; e += 1.0) ticks_.push_back(std::pow(10.0, e));
    } else {
      if (hi <= lo) hi = lo + 1.0;
      const double raw = (hi - lo) / 6.0;
      const double base = std::pow(10.0, std::floor(std::log10(raw)));
      double step = base;
      for (double f : {1.0, 2.0, 5.0, 10.0}) {
        step = f * base;
        if (step >= raw) break;
      }
      lo_ = std::floor(lo / step) * step;
      hi_ = std::ceil(hi / step) * step;
      const int n = static_cast<int>(std::lround((hi_ - lo_) / step));
      for (int i = 0; i <= n; ++i) ticks_.push_back(lo_ + i * step);
    }
  }

  double operator()(double v) const {
    const double t = scale_ == AxisScale::Log ? (std::log10(v) - lo_) / (hi_ - lo_)
                                              : (v - lo_) / (hi_ - lo_);
    return pixel_lo_ + t * (pixel_hi_ - pixel_lo_);
  }
  const std::vector<double>& ticks() const noexcept { return ticks_; }

 private:
  AxisScale scale_;
  double lo_ = 0.0;
  double hi_ = 1.0;
  double pixel_lo_;
  double pixel_hi_;
  std::vector<double> ticks_;
};

struct Bounds {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -std::numeric_limits<double>::infinity();
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();

  void add_x(double x) {
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
  }
  void add_y(double y) {
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  void add(ChartXY p) {
    add_x(p.x);
    add_y(p.y);
  }
};

Bounds data_bounds(const ChartSpec& spec) {
  Bounds b;
  for (const auto& p : spec.roof) b.add(p);
  for (const auto& s : spec.series) {
    for (const auto& p : s.points) b.add(p);
  }
  for (const auto& p : spec.points) b.add(p.at);
  for (const auto& g : spec.horizontal) b.add_y(g.value);
  for (const auto& g : spec.vertical) b.add_x(g.value);
  if (!std::isfinite(b.x_lo)) {
    b.x_lo = spec.x_scale == AxisScale::Log ? 0.1 : 0.0;
    b.x_hi = 1.0;
  }
  if (!std::isfinite(b.y_lo)) {
    b.y_lo = spec.y_scale == AxisScale::Log ? 0.1 : 0.0;
    b.y_hi = 1.0;
  }
  if (spec.y_scale == AxisScale::Linear) b.y_lo = std::min(b.y_lo, 0.0);
  return b;
}

}  // namespace

std::string render_svg(const ChartSpec& spec) {
  spec.validate();
  const Bounds b = data_bounds(spec);
  const double plot_right = kWidth - kRight;
  const double plot_bottom = kHeight - kBottom;
  const Axis ax(spec.x_scale, b.x_lo, b.x_hi, kLeft, plot_right);
  const Axis ay(spec.y_scale, b.y_lo, b.y_hi, plot_bottom, kTop);

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight, kWidth, kHeight);
  s += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
                   kWidth, kHeight);
  s += fmt::format("<text x=\"{}\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
                   coord((kLeft + plot_right) / 2), escape(spec.title));

  // Compute-limited region right of the ridge.
  if (spec.kind == ChartKind::Roofline) {
    const double xr = ax(spec.roof[1].x);
    s += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#fde9c8\" "
        "fill-opacity=\"0.6\"/>\n",
        coord(xr), coord(kTop), coord(plot_right - xr), coord(plot_bottom - kTop));
  }

  // Grid and ticks.
  for (double t : ax.ticks()) {
    const double x = ax(t);
    s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#dddddd\"/>\n",
                     coord(x), coord(kTop), coord(plot_bottom));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", coord(x),
                     coord(plot_bottom + 18), tick_label(t));
  }
  for (double t : ay.ticks()) {
    const double y = ay(t);
    s += fmt::format("<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#dddddd\"/>\n",
                     coord(y), coord(kLeft), coord(plot_right));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
                     coord(kLeft - 6), coord(y + 4), tick_label(t));
  }
  s += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#000000\"/>\n",
      coord(kLeft), coord(kTop), coord(plot_right - kLeft), coord(plot_bottom - kTop));
  s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                   coord((kLeft + plot_right) / 2), coord(kHeight - 18), escape(spec.x_label));
  s += fmt::format(
      "<text x=\"20\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0})\">{1}"
      "</text>\n",
      coord((kTop + plot_bottom) / 2), escape(spec.y_label));

  const auto polyline = [&](const std::vector<ChartXY>& pts, std::string_view color,
                            std::string_view extra) {
    std::string p;
    for (const auto& v : pts) {
      if (!p.empty()) p += ' ';
      p += coord(ax(v.x)) + "," + coord(ay(v.y));
    }
    return fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\"{}/>\n", p, color,
                       extra);
  };

  if (spec.kind == ChartKind::Roofline) {
    s += polyline(spec.roof, "#000000", " stroke-width=\"2.5\"");
    s += fmt::format("<text x=\"{}\" y=\"{}\">ridge {}</text>\n", coord(ax(spec.roof[1].x) + 4),
                     coord(ay(spec.roof[1].y) - 6), format_number(spec.roof[1].x));
  }

  double legend_y = kTop + 10;
  const double legend_x = plot_right + 14;
  const auto legend = [&](std::string_view color, std::string_view label, bool dashed) {
    s += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"{4}/>\n",
        coord(legend_x), coord(legend_y), coord(legend_x + 22), color,
        dashed ? " stroke-dasharray=\"5,3\"" : "");
    s += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", coord(legend_x + 28),
                     coord(legend_y + 4), escape(label));
    legend_y += 18;
  };
  const auto point_legend = [&](bool filled, std::string_view label) {
    s += fmt::format(
        "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\" stroke=\"#d62728\" "
        "stroke-width=\"1.5\"/>\n",
        coord(legend_x + 11), coord(legend_y), filled ? "#d62728" : "#ffffff");
    s += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", coord(legend_x + 28),
                     coord(legend_y + 4), escape(label));
    legend_y += 18;
  };

  if (spec.kind == ChartKind::Roofline) {
    legend("#000000", "roofline", false);
    const bool any_measured =
        std::any_of(spec.points.begin(), spec.points.end(), [](const ChartPoint& p) {
          return p.filled;
        });
    if (!spec.points.empty()) point_legend(false, "model (attainable)");
    if (any_measured) point_legend(true, "measured");
  }

  std::size_t color = 0;
  for (const auto& series : spec.series) {
    const char* c = kPalette[color++ % kPalette.size()];
    s += polyline(series.points, c, " stroke-width=\"2\"");
    if (series.show_markers) {
      for (const auto& v : series.points) {
        s += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{}\"/>\n", coord(ax(v.x)),
                         coord(ay(v.y)), c);
      }
    }
    legend(c, series.label, false);
  }

  for (const auto& g : spec.horizontal) {
    const char* c = kPalette[color++ % kPalette.size()];
    const double y = ay(g.value);
    s += fmt::format(
        "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"{3}\" "
        "stroke-dasharray=\"6,4\"/>\n",
        coord(y), coord(kLeft), coord(plot_right), c);
    legend(c, g.label + " (" + format_number(g.value) + ")", true);
  }
  for (const auto& g : spec.vertical) {
    const double x = ax(g.value);
    s += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#777777\" "
        "stroke-dasharray=\"2,3\"/>\n",
        coord(x), coord(kTop), coord(plot_bottom));
    s += fmt::format(
        "<text x=\"{0}\" y=\"{1}\" font-size=\"10\" transform=\"rotate(-90 {0} {1})\">{2}</text>\n",
        coord(x - 3), coord(plot_bottom - 6), escape(g.label));
  }

  // Dense sweeps keep labels only on measured points so the text stays legible.
  const bool label_all = spec.points.size() <= kMaxLabelledPoints;
  for (const auto& p : spec.points) {
    const double x = ax(p.at.x);
    const double y = ay(p.at.y);
    s += fmt::format(
        "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n",
        coord(x), coord(y), p.filled ? "#d62728" : "#ffffff");
    if (!label_all && !p.filled) continue;
    s += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"10\">{}</text>\n", coord(x + 6),
                     coord(y + 12), escape(p.label));
  }

  s += "</svg>\n";
  return s;
}

void write_svg(const ChartSpec& spec) {
  const std::string doc = render_svg(spec);
  std::ofstream out(spec.output, std::ios::binary);
  if (!out) throw Error("cannot write '" + spec.output.string() + "'");
  out << doc;
  if (!out) throw Error("failed writing '" + spec.output.string() + "'");
}

ChartSpec roofline_chart(const RooflineDataset& dataset) {
  ChartSpec spec;
  spec.kind = ChartKind::Roofline;
  spec.title = "Roofline: " + dataset.machine;
  spec.x_label = "Operational intensity (FLOPs/byte)";
  spec.y_label = "Performance (GFLOPS)";
  spec.x_scale = AxisScale::Log;
  spec.y_scale = AxisScale::Log;
  for (const auto& v : dataset.roof) spec.roof.push_back({v.oi, v.gflops});
  for (const auto& p : dataset.points) {
    spec.points.push_back({p.label, {p.oi, p.attainable_gflops}, false});
    if (p.measured_gflops) {
      spec.points.push_back({p.label + " measured " + format_number(*p.measured_gflops),
                             {p.oi, *p.measured_gflops},
                             true});
    }
  }
  for (const auto& m : dataset.markers) spec.vertical.push_back({m.label, m.oi});
  return spec;
}

ChartSpec oi_curve_chart(const OICurveSet& curves) {
  ChartSpec spec;
  spec.kind = ChartKind::OICurve;
  spec.title = "Operational intensity vs stencil size";
  spec.x_label = "Stencil size k";
  spec.y_label = "Operational intensity (FLOPs/byte)";
  spec.x_scale = AxisScale::Linear;
  spec.y_scale = AxisScale::Linear;
  for (const auto& s : curves.series) {
    ChartSeries cs;
    cs.label = s.equation;
    cs.show_markers = true;
    for (const auto& v : s.samples) cs.points.push_back({static_cast<double>(v.k), v.oi});
    spec.series.push_back(std::move(cs));
  }
  for (const auto& m : curves.markers) spec.horizontal.push_back({"I_min " + m.machine, m.ridge});
  return spec;
}

}  // namespace fdroof
