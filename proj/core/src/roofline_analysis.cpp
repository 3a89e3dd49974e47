#include "fdroof/roofline_analysis.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fdroof/error.hpp"
#include "fdroof/fd_stencil.hpp"
#include "fdroof/report.hpp"

namespace fdroof {

bool RooflinePoint::exceeds_roof(double epsilon) const noexcept {
  return measured_gflops && *measured_gflops > attainable_gflops * (1.0 + epsilon);
}

RooflinePoint make_point(const MachineSpec& machine, std::string label, int k, double oi,
                         std::optional<double> measured) {
  const Attainable a = attainable_performance(machine, oi);
  RooflinePoint p;
  p.label = std::move(label);
  p.k = k;
  p.oi = oi;
  p.attainable_gflops = a.gflops;
  p.bound = a.bound;
  p.measured_gflops = measured;
  return p;
}

std::optional<int> min_compute_bound_order(const EquationSpec& eq, const MachineSpec& machine,
                                           int max_order) {
  const double ridge = ridge_point(machine);
  for (int order = 2; order <= max_order; order += 2) {
    const int k = stencil_size_for_order(order);
    if (operational_intensity(eq, k, machine.precision_bytes).oi >= ridge) return order;
  }
  return std::nullopt;
}

double achieved_gflops(const EquationSpec& eq, int k, double grid_points, double time_steps,
                       double runtime_s) {
  if (runtime_s == 0.0) throw Error("runtime must be non-zero");
  if (!(grid_points > 0.0) || !(time_steps > 0.0) || !(runtime_s > 0.0)) {
    throw ValidationError("grid points, time steps and runtime must be positive");
  }
  return grid_points * static_cast<double>(kernel_flops(eq, k)) * time_steps / runtime_s / 1e9;
}

UtilizationReport utilization(double achieved, const MachineSpec& machine, double oi) {
  if (!(achieved > 0.0)) throw ValidationError("achieved GFLOPS must be positive");
  UtilizationReport r;
  r.achieved_gflops = achieved;
  r.attainable_gflops = attainable_performance(machine, oi).gflops;
  r.utilization = achieved / r.attainable_gflops;
  r.headroom_factor = r.attainable_gflops / achieved;
  return r;
}

OICurveSet oi_curve(const std::vector<EquationSpec>& equations, int k_min, int k_max,
                    const std::vector<MachineSpec>& machines, int precision_bytes) {
  if (k_min < 2 || k_max > kMaxSpatialOrder + 1 || k_min > k_max) {
    throw RangeError(fmt::format("k range must lie within 2..{}, got {}..{}",
                                 kMaxSpatialOrder + 1, k_min, k_max));
  }
  OICurveSet out;
  for (const auto& eq : equations) {
    OISeries s;
    s.equation = eq.name;
    for (int k = k_min | 1; k <= k_max; k += 2) {
      s.samples.push_back({k, operational_intensity(eq, k, precision_bytes).oi});
    }
    out.series.push_back(std::move(s));
  }
  for (const auto& m : machines) out.markers.push_back({m.name, ridge_point(m)});
  return out;
}

std::vector<ReferenceMarker> default_reference_markers() {
  return {{"SpMV", 0.166}, {"7-point stencil", 0.5}, {"3D FFT", 1.64}};
}

RooflineDataset roofline_dataset(const MachineSpec& machine,
                                 const std::vector<RooflineRequest>& requests,
                                 const std::vector<ReferenceMarker>& markers) {
  RooflineDataset d;
  d.machine = machine.name;
  d.ridge = ridge_point(machine);
  d.peak_gflops = *machine.peak_gflops_achievable;
  d.peak_bw = *machine.peak_bw_achievable;
  d.markers = markers;

  double lo = d.ridge;
  double hi = d.ridge;
  for (const auto& req : requests) {
    const OIResult oi = operational_intensity(req.equation, req.k, machine.precision_bytes);
    d.points.push_back(make_point(machine, req.label, req.k, oi.oi, req.measured_gflops));
    lo = std::min(lo, oi.oi);
    hi = std::max(hi, oi.oi);
  }
  for (const auto& m : markers) {
    lo = std::min(lo, m.oi);
    hi = std::max(hi, m.oi);
  }
  // Extend the roof one decade beyond the data on both sides.
  const double x0 = std::pow(10.0, std::floor(std::log10(lo)) - 1.0);
  const double x1 = std::pow(10.0, std::ceil(std::log10(hi)) + 1.0);
  d.roof = {{x0, x0 * d.peak_bw}, {d.ridge, d.peak_gflops}, {x1, d.peak_gflops}};
  return d;
}

void write_roofline_csv(std::ostream& out, const RooflineDataset& dataset) {
  out << "label,k,oi,attainable_gflops,bound,measured_gflops\n";
  for (const auto& p : dataset.points) {
    out << csv_field(p.label) << ',' << p.k << ',' << format_number(p.oi) << ','
        << format_number(p.attainable_gflops) << ',' << to_string(p.bound) << ','
        << (p.measured_gflops ? format_number(*p.measured_gflops) : std::string()) << '\n';
  }
}

}  // namespace fdroof
