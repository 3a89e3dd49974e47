#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fdroof/roofline_analysis.hpp"

namespace fdroof {

enum class ChartKind { Roofline, OICurve };
enum class AxisScale { Linear, Log };

struct ChartXY {
  double x = 0.0;
  double y = 0.0;
};

struct ChartSeries {
  std::string label;
  std::vector<ChartXY> points;
  bool show_markers = false;
};

struct ChartPoint {
  std::string label;
  ChartXY at;
  bool filled = false;
};

// Axis-parallel reference line: horizontal lines sit at y, vertical at x.
struct ChartGuide {
  std::string label;
  double value = 0.0;
};

struct ChartSpec {
  ChartKind kind = ChartKind::Roofline;
  std::string title;
  std::string x_label;
  std::string y_label;
  AxisScale x_scale = AxisScale::Log;
  AxisScale y_scale = AxisScale::Log;
  // Roofline charts: slope start, ridge, flat-roof end.
  std::vector<ChartXY> roof;
  std::vector<ChartSeries> series;
  std::vector<ChartPoint> points;
  std::vector<ChartGuide> horizontal;
  std::vector<ChartGuide> vertical;
  std::filesystem::path output;

  // Roofline charts need a three-vertex roof whose middle vertex starts the
  // flat segment; log axes need positive data. Throws ValidationError.
  void validate() const;
};

ChartSpec roofline_chart(const RooflineDataset& dataset);
ChartSpec oi_curve_chart(const OICurveSet& curves);

// SVG 1.1 document. Byte-identical output for identical specs.
std::string render_svg(const ChartSpec& spec);

// Renders to spec.output. Throws Error when the path is not writable.
void write_svg(const ChartSpec& spec);

}  // namespace fdroof
