#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fdroof/cost_to_solution.hpp"
#include "fdroof/equation_catalog.hpp"
#include "fdroof/error.hpp"
#include "fdroof/machine_model.hpp"

namespace fdroof {
namespace {

const std::vector<int> kOrders{2, 6, 12, 18, 24};

std::vector<MachineSpec> xeon_and_phi() {
  const MachineRegistry r;
  return {r.get("xeon-e5-2697v2-2s"), r.get("phi-7120a")};
}

CostTable default_table() {
  const EquationCatalog c;
  return scenario_table(CostScenario{}, kOrders, xeon_and_phi(), c.get("acoustic"));
}

TEST(PointsPerWavelength, BreakpointsAndInterpolation) {
  const CostScenario sc;
  EXPECT_EQ(points_per_wavelength(sc, 12), 4.0);
  EXPECT_EQ(points_per_wavelength(sc, 2), 6.0);
  EXPECT_DOUBLE_EQ(points_per_wavelength(sc, 9), 4.5);
  EXPECT_DOUBLE_EQ(points_per_wavelength(sc, 4), 5.5);
  EXPECT_THROW(points_per_wavelength(sc, 26), RangeError);
  EXPECT_THROW(points_per_wavelength(sc, 0), RangeError);
}

TEST(GridSpacing, ExactValues) {
  const CostScenario sc;
  const double expected[] = {1.0, 1.2, 1.5, 2.0, 3.0};
  for (std::size_t i = 0; i < kOrders.size(); ++i) {
    EXPECT_EQ(grid_spacing(sc, kOrders[i]), expected[i]) << kOrders[i];
  }
}

TEST(StableDt, TableValues) {
  const CostScenario sc;
  EXPECT_NEAR(stable_dt(sc, 2), 0.5774, 1e-4);
  EXPECT_NEAR(stable_dt(sc, 18), 0.8399, 1e-3);
  const double expected[] = {0.5774, 0.5637, 0.6513, 0.8399, 1.2359};
  for (std::size_t i = 0; i < kOrders.size(); ++i) {
    EXPECT_NEAR(stable_dt(sc, kOrders[i]), expected[i], 1e-3) << kOrders[i];
  }
}

TEST(StableDt, SquareRootScalingInA1) {
  CostScenario sc;
  const double base = stable_dt(sc, 2);
  sc.a1 *= 4;
  EXPECT_DOUBLE_EQ(stable_dt(sc, 2), 2 * base);
}

TEST(StableDt, NonIncreasingInA2AtFixedSpacing) {
  CostScenario sc;
  sc.p_breakpoints = {{2, 6.0}, {32, 6.0}};
  double prev = stable_dt(sc, 2);
  for (int order = 4; order <= 32; order += 2) {
    const double dt = stable_dt(sc, order);
    EXPECT_LE(dt, prev) << order;
    prev = dt;
  }
}

TEST(CeilTolerant, RoundsUpExceptNearIntegers) {
  EXPECT_EQ(ceil_tolerant(20.0), 20);
  EXPECT_EQ(ceil_tolerant(2750.0 / 137.5), 20);
  EXPECT_EQ(ceil_tolerant(20.0 + 1e-12), 20);
  EXPECT_EQ(ceil_tolerant(20.001), 21);
  EXPECT_EQ(ceil_tolerant(467.2), 468);
  EXPECT_EQ(ceil_tolerant(0.3), 1);
}

TEST(ScenarioTable, Table2Columns) {
  const auto t = default_table();
  ASSERT_EQ(t.rows.size(), 5u);
  const double a2[] = {12, 18.13, 21.22, 22.68, 23.57};
  const double n[] = {1.25e8, 7.24e7, 3.70e7, 1.56e7, 4.63e6};
  const std::int64_t nt[] = {1000, 1024, 887, 688, 468};
  const double p[] = {6, 5, 4, 3, 2};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& r = t.rows[i];
    EXPECT_NEAR(r.a2, a2[i], 0.01) << r.order;
    EXPECT_EQ(r.p, p[i]);
    EXPECT_NEAR(r.n_grid / n[i], 1.0, 0.01) << r.order;
    EXPECT_LE(std::llabs(r.n_t - nt[i]), 1) << r.order;
  }
}

TEST(ScenarioTable, Table3Columns) {
  const auto t = default_table();
  const double oi[] = {1.375, 2.875, 5.125, 7.375, 9.625};
  const double total[] = {2.75e3, 3.414e3, 2.691e3, 1.266e3, 3.337e2};
  const std::int64_t xeon_s[] = {20, 12, 6, 2, 1};
  const std::int64_t phi_s[] = {10, 6, 3, 1, 1};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& r = t.rows[i];
    EXPECT_EQ(r.oi, oi[i]);
    EXPECT_NEAR(r.total_gflops / total[i], 1.0, 0.01) << r.order;
    ASSERT_EQ(r.machines.size(), 2u);
    EXPECT_EQ(r.machines[0].runtime_s, xeon_s[i]) << r.order;
    EXPECT_EQ(r.machines[1].runtime_s, phi_s[i]) << r.order;
  }
}

TEST(ScenarioTable, PredictedIsUncappedCappedIsRoofline) {
  const auto t = default_table();
  const auto& last = t.rows.back().machines[0];
  EXPECT_DOUBLE_EQ(last.predicted_gflops, 962.5);
  EXPECT_DOUBLE_EQ(last.capped_gflops, 930.0);
  const auto& first = t.rows.front().machines[0];
  EXPECT_DOUBLE_EQ(first.predicted_gflops, 137.5);
  EXPECT_DOUBLE_EQ(first.capped_gflops, 137.5);
}

TEST(ScenarioTable, Invariants) {
  const auto t = default_table();
  for (const auto& r : t.rows) {
    EXPECT_NEAR(r.n_grid * std::pow(r.h, 3) / 1.25e8, 1.0, 1e-12) << r.order;
    EXPECT_GE(static_cast<double>(r.n_t) * r.dt, t.final_time * (1 - 1e-12)) << r.order;
    EXPECT_DOUBLE_EQ(r.dt, r.h * std::sqrt(4.0 / r.a2));
  }
  for (std::size_t i = 2; i < t.rows.size(); ++i) {
    EXPECT_LT(t.rows[i].total_gflops, t.rows[i - 1].total_gflops);
  }
  EXPECT_FALSE(t.outside_validated_scope);
}

TEST(ScenarioTable, NonAcousticIsFlagged) {
  const EquationCatalog c;
  const auto t = scenario_table(CostScenario{}, {2}, xeon_and_phi(), c.get("vti"));
  EXPECT_TRUE(t.outside_validated_scope);
}

TEST(ScenarioTable, IntegerGridOption) {
  CostScenario sc;
  sc.integer_grid = true;
  const EquationCatalog c;
  const auto t = scenario_table(sc, {6}, xeon_and_phi(), c.get("acoustic"));
  EXPECT_EQ(t.rows[0].n_grid, 417.0 * 417.0 * 417.0);
}

TEST(ScenarioTable, MachineWithoutRates) {
  MachineSpec bare;
  bare.name = "bare";
  bare.peak_gflops_theoretical = 100;
  bare.peak_bw_theoretical = 10;
  const EquationCatalog c;
  EXPECT_THROW(scenario_table(CostScenario{}, {2}, {bare}, c.get("acoustic")), UnknownRatesError);
}

TEST(CostCsv, HeaderAndFirstRow) {
  const EquationCatalog c;
  const auto t = scenario_table(CostScenario{}, {2}, xeon_and_phi(), c.get("acoustic"));
  std::ostringstream out;
  write_cost_csv(out, t);
  EXPECT_EQ(out.str(),
            "order,a2,p,h,dt,N,nt,oi,total_gflops,xeon-e5-2697v2-2s_gflops,"
            "xeon-e5-2697v2-2s_runtime_s,phi-7120a_gflops,phi-7120a_runtime_s\n"
            "2,12.0000,6.0000,1.0000,0.5774,125000000.0000,1000,1.3750,2750.0000,137.5000,20,"
            "275.0000,10\n");
}

TEST(Scenario, ParseFile) {
  const auto sc = parse_cost_scenario(
      "domain_extent: 400\nbase_nt: 500\np_breakpoints:\n  2: 8\n  10: 4\n", "s.yaml");
  EXPECT_EQ(sc.domain_extent, 400.0);
  EXPECT_EQ(sc.base_p, 8.0);
  EXPECT_DOUBLE_EQ(points_per_wavelength(sc, 6), 6.0);
  EXPECT_DOUBLE_EQ(grid_spacing(sc, 10), 2.0);
}

TEST(Scenario, ParseErrors) {
  EXPECT_THROW(parse_cost_scenario("speed: 3\n", "s.yaml"), ParseError);
  EXPECT_THROW(parse_cost_scenario("p_breakpoints:\n  2: 4\n  6: 5\n", "s.yaml"), ParseError);
  EXPECT_THROW(parse_cost_scenario("base_order: 4\n", "s.yaml"), ParseError);
  EXPECT_THROW(parse_cost_scenario("a1: -1\n", "s.yaml"), ParseError);
  EXPECT_THROW(parse_cost_scenario("p_breakpoints:\n  two: 4\n", "s.yaml"), ParseError);
  const auto empty = parse_cost_scenario("", "s.yaml");
  EXPECT_EQ(empty.domain_extent, 500.0);
}

}  // namespace
}  // namespace fdroof
