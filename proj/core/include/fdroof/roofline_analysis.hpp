#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fdroof/equation_catalog.hpp"
#include "fdroof/machine_model.hpp"

namespace fdroof {

inline constexpr int kMaxSpatialOrder = 64;

struct RooflinePoint {
  std::string label;
  int k = 0;
  double oi = 0.0;
  double attainable_gflops = 0.0;
  Bound bound = Bound::Memory;
  std::optional<double> measured_gflops;

  // True when a measurement sits above the roof by more than `epsilon`
  // (relative). Such points indicate an inconsistent model, not an error.
  bool exceeds_roof(double epsilon) const noexcept;
};

RooflinePoint make_point(const MachineSpec& machine, std::string label, int k, double oi,
                         std::optional<double> measured = std::nullopt);

struct UtilizationReport {
  double achieved_gflops = 0.0;
  double attainable_gflops = 0.0;
  double utilization = 0.0;      // achieved / attainable
  double headroom_factor = 0.0;  // attainable / achieved
};

// Smallest even order (k = order + 1) whose OI reaches the machine's ridge
// point, scanning orders 2..max_order. nullopt means "never" within range.
// OI is evaluated at the machine's precision.
std::optional<int> min_compute_bound_order(const EquationSpec& eq, const MachineSpec& machine,
                                           int max_order = kMaxSpatialOrder);

// N × kernel_flops(eq, k) × n_t / W, in GFLOPS. `grid_points` is the total
// point count N.
double achieved_gflops(const EquationSpec& eq, int k, double grid_points, double time_steps,
                       double runtime_s);

UtilizationReport utilization(double achieved_gflops, const MachineSpec& machine, double oi);

struct OISample {
  int k = 0;
  double oi = 0.0;
};

struct OISeries {
  std::string equation;
  std::vector<OISample> samples;
};

struct RidgeMarker {
  std::string machine;
  double ridge = 0.0;
};

struct OICurveSet {
  std::vector<OISeries> series;
  std::vector<RidgeMarker> markers;
};

// OI over odd k in [k_min, k_max] (both within 2..64+1) for each equation,
// plus one horizontal I_min marker per machine.
OICurveSet oi_curve(const std::vector<EquationSpec>& equations, int k_min, int k_max,
                    const std::vector<MachineSpec>& machines = {}, int precision_bytes = 4);

// Named OI reference line drawn on roofline charts (e.g. SpMV).
struct ReferenceMarker {
  std::string label;
  double oi = 0.0;
};

// Commonly cited reference intensities. External-literature values used only
// as optional chart decorations.
std::vector<ReferenceMarker> default_reference_markers();

struct RooflineRequest {
  std::string label;
  EquationSpec equation;
  int k = 0;
  std::optional<double> measured_gflops;
};

struct RooflineVertex {
  double oi = 0.0;
  double gflops = 0.0;
};

struct RooflineDataset {
  std::string machine;
  double ridge = 0.0;
  double peak_gflops = 0.0;
  double peak_bw = 0.0;
  std::vector<RooflinePoint> points;
  std::vector<RooflineVertex> roof;  // bandwidth slope then flat roof, meeting at the ridge
  std::vector<ReferenceMarker> markers;
};

RooflineDataset roofline_dataset(const MachineSpec& machine,
                                 const std::vector<RooflineRequest>& requests,
                                 const std::vector<ReferenceMarker>& markers = {});

// CSV: label,k,oi,attainable_gflops,bound,measured_gflops
void write_roofline_csv(std::ostream& out, const RooflineDataset& dataset);

}  // namespace fdroof
