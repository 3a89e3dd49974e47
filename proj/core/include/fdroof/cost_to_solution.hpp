#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fdroof/equation_catalog.hpp"
#include "fdroof/machine_model.hpp"

namespace fdroof {

// Fixed physical problem whose discretization varies with spatial order.
// Grid spacing is normalized so that h(base_order) = 1, and p·h is constant
// across orders (the dispersion criterion at fixed v_min / f_max).
struct CostScenario {
  double domain_extent = 500.0;  // grid points per dimension at base order
  int base_order = 2;
  double base_p = 6.0;
  std::map<int, double> p_breakpoints{{2, 6.0}, {6, 5.0}, {12, 4.0}, {18, 3.0}, {24, 2.0}};
  double a1 = 4.0;  // |weights| of the second-order time derivative
  double v_max = 1.0;
  double base_nt = 1000.0;
  int dims = 3;
  std::string equation = "acoustic";
  bool integer_grid = false;  // round extent / h to whole points per dimension

  void validate() const;  // throws ValidationError
};

CostScenario parse_cost_scenario(std::string_view text, const std::string& source);

// Exact breakpoint value, else linear interpolation between neighbours.
// Throws RangeError outside the breakpoint span.
double points_per_wavelength(const CostScenario& scenario, int order);

double grid_spacing(const CostScenario& scenario, int order);

// h · sqrt(a1 / a2) / v_max with a2 from the generated FD weights.
double stable_dt(const CostScenario& scenario, int order);

struct MachineCost {
  std::string machine;
  double predicted_gflops = 0.0;  // oi × achievable bandwidth, not clamped
  double capped_gflops = 0.0;     // roofline value, clamped at peak
  std::int64_t runtime_s = 0;     // ceil(total_gflops / predicted_gflops)
};

struct CostRow {
  int order = 0;
  int k = 0;
  double a2 = 0.0;
  double p = 0.0;
  double h = 0.0;
  double dt = 0.0;
  double n_grid = 0.0;
  std::int64_t n_t = 0;
  double oi = 0.0;
  double total_gflops = 0.0;
  std::vector<MachineCost> machines;
};

struct CostTable {
  std::vector<CostRow> rows;
  std::vector<std::string> machines;
  double final_time = 0.0;
  // The stability analysis behind the table only covers the acoustic case.
  bool outside_validated_scope = false;
};

// Rounds up, treating values within a relative 1e-9 of an integer as that
// integer so exact ratios (e.g. 2750 / 137.5) are not bumped by roundoff.
std::int64_t ceil_tolerant(double value);

CostTable scenario_table(const CostScenario& scenario, const std::vector<int>& orders,
                         const std::vector<MachineSpec>& machines, const EquationSpec& equation);

// order,a2,p,h,dt,N,nt,oi,total_gflops,{machine}_gflops,{machine}_runtime_s
void write_cost_csv(std::ostream& out, const CostTable& table);

}  // namespace fdroof
