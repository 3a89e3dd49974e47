#include "fdroof/cost_to_solution.hpp"

#include <fmt/format.h>

#include <array>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <ostream>

#include "fdroof/error.hpp"
#include "fdroof/fd_stencil.hpp"
#include "fdroof/kv_document.hpp"
#include "fdroof/report.hpp"

namespace fdroof {

void CostScenario::validate() const {
  if (!(domain_extent > 0.0)) throw ValidationError("domain_extent must be positive");
  if (!(a1 > 0.0)) throw ValidationError("a1 must be positive");
  if (!(v_max > 0.0)) throw ValidationError("v_max must be positive");
  if (!(base_nt > 0.0)) throw ValidationError("base_nt must be positive");
  if (!(base_p > 0.0)) throw ValidationError("base_p must be positive");
  if (dims < 1) throw ValidationError("dims must be >= 1");
  if (p_breakpoints.empty()) throw ValidationError("p_breakpoints must not be empty");
  auto base = p_breakpoints.find(base_order);
  if (base == p_breakpoints.end()) {
    throw ValidationError("base_order must appear in p_breakpoints");
  }
  if (base->second != base_p) {
    throw ValidationError("p_breakpoints at base_order must equal base_p");
  }
  double prev = 0.0;
  bool first = true;
  for (const auto& entry : p_breakpoints) {
    const double p = entry.second;
    if (!(p > 0.0)) throw ValidationError("points per wavelength must be positive");
    if (!first && p > prev) {
      throw ValidationError("points per wavelength must be non-increasing in order");
    }
    prev = p;
    first = false;
  }
}

namespace {

constexpr std::array<std::string_view, 9> kScenarioKeys = {
    "domain_extent", "base_order", "base_p", "a1",          "v_max",
    "base_nt",       "dims",       "equation", "integer_grid"};
constexpr std::array<std::string_view, 1> kScenarioPrefixes = {"p_breakpoints."};

}  // namespace

CostScenario parse_cost_scenario(std::string_view text, const std::string& source) {
  const auto docs = parse_kv_documents(text, source);
  CostScenario sc;
  if (docs.empty()) return sc;
  if (docs.size() > 1) throw ParseError(source, docs[1].line(), "expected a single scenario");
  const KvDocument& doc = docs.front();
  doc.require_known_keys(kScenarioKeys, kScenarioPrefixes);

  if (auto v = doc.get_double("domain_extent")) sc.domain_extent = *v;
  if (auto v = doc.get_int("base_order")) sc.base_order = static_cast<int>(*v);
  if (auto v = doc.get_double("base_p")) sc.base_p = *v;
  if (auto v = doc.get_double("a1")) sc.a1 = *v;
  if (auto v = doc.get_double("v_max")) sc.v_max = *v;
  if (auto v = doc.get_double("base_nt")) sc.base_nt = *v;
  if (auto v = doc.get_int("dims")) sc.dims = static_cast<int>(*v);
  if (auto v = doc.get_string("equation")) sc.equation = *v;
  if (auto v = doc.get_bool("integer_grid")) sc.integer_grid = *v;

  const auto breakpoints = doc.children("p_breakpoints");
  if (!breakpoints.empty()) {
    sc.p_breakpoints.clear();
    for (const auto& [key, entry] : breakpoints) {
      int order = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), order);
      if (ec != std::errc{} || ptr != key.data() + key.size()) {
        throw ParseError(source, entry.line, "breakpoint key '" + key + "' is not an order");
      }
      sc.p_breakpoints[order] = *doc.get_double("p_breakpoints." + key);
    }
    if (!doc.has("base_p")) {
      auto it = sc.p_breakpoints.find(sc.base_order);
      if (it != sc.p_breakpoints.end()) sc.base_p = it->second;
    }
  }
  try {
    sc.validate();
  } catch (const ValidationError& e) {
    throw ParseError(source, doc.line(), e.what());
  }
  return sc;
}

double points_per_wavelength(const CostScenario& scenario, int order) {
  const auto& bp = scenario.p_breakpoints;
  if (bp.empty() || order < bp.begin()->first || order > bp.rbegin()->first) {
    throw RangeError(fmt::format("order {} is outside the points-per-wavelength breakpoints",
                                 order));
  }
  auto hi = bp.lower_bound(order);
  if (hi->first == order) return hi->second;
  auto lo = std::prev(hi);
  const double t = static_cast<double>(order - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

double grid_spacing(const CostScenario& scenario, int order) {
  return scenario.base_p / points_per_wavelength(scenario, order);
}

double stable_dt(const CostScenario& scenario, int order) {
  const double a2 = a2_sum(order, scenario.dims);
  return grid_spacing(scenario, order) * std::sqrt(scenario.a1 / a2) / scenario.v_max;
}

std::int64_t ceil_tolerant(double value) {
  const double nearest = std::round(value);
  if (std::fabs(value - nearest) <= 1e-9 * std::max(1.0, std::fabs(value))) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::ceil(value));
}

CostTable scenario_table(const CostScenario& scenario, const std::vector<int>& orders,
                         const std::vector<MachineSpec>& machines, const EquationSpec& equation) {
  scenario.validate();
  CostTable table;
  table.outside_validated_scope = equation.name != "acoustic";
  for (const auto& m : machines) table.machines.push_back(m.name);

  const double base_dt = stable_dt(scenario, scenario.base_order);
  table.final_time = scenario.base_nt * base_dt;

  for (int order : orders) {
    CostRow row;
    row.order = order;
    row.k = stencil_size_for_order(order);
    row.a2 = a2_sum(order, scenario.dims);
    row.p = points_per_wavelength(scenario, order);
    row.h = grid_spacing(scenario, order);
    row.dt = stable_dt(scenario, order);
    const double per_dim = scenario.domain_extent / row.h;
    row.n_grid = std::pow(scenario.integer_grid ? std::round(per_dim) : per_dim, scenario.dims);
    row.n_t = ceil_tolerant(table.final_time / row.dt);

    // OI is tabulated at single precision, independent of machine precision.
    const OIResult oi = operational_intensity(equation, row.k, 4);
    row.oi = oi.oi;
    row.total_gflops = static_cast<double>(oi.kernel_flops) * row.n_grid *
                       static_cast<double>(row.n_t) / 1e9;

    for (const auto& m : machines) {
      MachineCost mc;
      mc.machine = m.name;
      if (!m.has_achievable_rates()) throw UnknownRatesError(m.name);
      mc.predicted_gflops = row.oi * *m.peak_bw_achievable;
      mc.capped_gflops = attainable_performance(m, row.oi).gflops;
      mc.runtime_s = ceil_tolerant(row.total_gflops / mc.predicted_gflops);
      row.machines.push_back(std::move(mc));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_cost_csv(std::ostream& out, const CostTable& table) {
  out << "order,a2,p,h,dt,N,nt,oi,total_gflops";
  for (const auto& m : table.machines) {
    out << ',' << csv_field(m + "_gflops") << ',' << csv_field(m + "_runtime_s");
  }
  out << '\n';
  for (const auto& r : table.rows) {
    out << r.order << ',' << format_number(r.a2) << ',' << format_number(r.p) << ','
        << format_number(r.h) << ',' << format_number(r.dt) << ',' << format_number(r.n_grid)
        << ',' << r.n_t << ',' << format_number(r.oi) << ',' << format_number(r.total_gflops);
    for (const auto& mc : r.machines) {
      out << ',' << format_number(mc.predicted_gflops) << ',' << mc.runtime_s;
    }
    out << '\n';
  }
}

}  // namespace fdroof
