#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fdroof/equation_catalog.hpp"
#include "fdroof/error.hpp"
#include "fdroof/machine_model.hpp"
#include "fdroof/roofline_analysis.hpp"

namespace fdroof {
namespace {

const MachineRegistry& registry() {
  static const MachineRegistry r;
  return r;
}
const EquationCatalog& catalog() {
  static const EquationCatalog c;
  return c;
}
const MachineSpec& xeon() { return registry().get("xeon-e5-2697v2-2s"); }
const MachineSpec& phi() { return registry().get("phi-7120a"); }
const MachineSpec& gpu() { return registry().get("gtx480"); }
const EquationSpec& eq(std::string_view name) { return catalog().get(name); }

TEST(MinOrder, Xeon) {
  EXPECT_EQ(min_compute_bound_order(eq("acoustic"), xeon()), 24);
  EXPECT_EQ(min_compute_bound_order(eq("vti"), xeon()), 26);
  EXPECT_EQ(min_compute_bound_order(eq("tti"), xeon()), 6);
}

TEST(MinOrder, Gpu) {
  EXPECT_EQ(min_compute_bound_order(eq("acoustic"), gpu()), 22);
  EXPECT_EQ(min_compute_bound_order(eq("vti"), gpu()), 24);
  EXPECT_EQ(min_compute_bound_order(eq("tti"), gpu()), 6);
}

// The published discussion quotes 30 (VTI) and 6 (TTI) for the Phi; its own
// OI formulas against I_min = 10.89 give 32 and 8.
TEST(MinOrder, PhiFollowsTheFormulas) {
  EXPECT_EQ(min_compute_bound_order(eq("acoustic"), phi()), 28);
  EXPECT_EQ(min_compute_bound_order(eq("vti"), phi()), 32);
  EXPECT_EQ(min_compute_bound_order(eq("tti"), phi()), 8);
  EXPECT_LT(operational_intensity(eq("vti"), 31).oi, 10.89);
  EXPECT_LT(operational_intensity(eq("tti"), 7).oi, 10.89);
}

TEST(MinOrder, NeverWithinRange) {
  EXPECT_FALSE(min_compute_bound_order(eq("acoustic"), xeon(), 22).has_value());
  MachineSpec huge = xeon();
  huge.name = "huge";
  huge.peak_gflops_achievable = 1e6;
  EXPECT_FALSE(min_compute_bound_order(eq("vti"), huge).has_value());
}

TEST(MinOrder, BracketingPropertyForAllBuiltins) {
  for (const auto& m : registry().machines()) {
    const double ridge = ridge_point(m);
    for (const auto& e : catalog().equations()) {
      const auto order = min_compute_bound_order(e, m);
      if (!order) {
        EXPECT_LT(operational_intensity(e, kMaxSpatialOrder + 1, m.precision_bytes).oi, ridge);
        continue;
      }
      EXPECT_GE(operational_intensity(e, *order + 1, m.precision_bytes).oi, ridge)
          << e.name << " on " << m.name;
      if (*order > 2) {
        EXPECT_LT(operational_intensity(e, *order - 1, m.precision_bytes).oi, ridge)
            << e.name << " on " << m.name;
      }
    }
  }
}

TEST(MinOrder, DoublePrecisionMachineNeedsHigherOrder) {
  MachineSpec dp = xeon();
  dp.precision_bytes = 8;
  const auto order = min_compute_bound_order(eq("acoustic"), dp);
  ASSERT_TRUE(order.has_value());
  EXPECT_GT(*order, 24);
}

TEST(AchievedGflops, ElasticExample) {
  const double n = 225.0 * 225.0 * 225.0;
  EXPECT_NEAR(achieved_gflops(eq("elastic-stiff"), 9, n, 1000, 53), 94.8, 0.1);
}

TEST(AchievedGflops, LinearInWorkInverseInRuntime) {
  const auto& a = eq("acoustic");
  const double base = achieved_gflops(a, 9, 1e6, 100, 2.0);
  EXPECT_DOUBLE_EQ(achieved_gflops(a, 9, 1e6, 100, 4.0), base / 2);
  EXPECT_DOUBLE_EQ(achieved_gflops(a, 9, 2e6, 100, 2.0), base * 2);
  EXPECT_DOUBLE_EQ(achieved_gflops(a, 9, 1e6, 300, 2.0), base * 3);
}

TEST(AchievedGflops, SmallAcoustic) {
  EXPECT_NEAR(achieved_gflops(eq("acoustic"), 3, 1000, 1, 1), 2.2e-5, 1e-15);
}

TEST(AchievedGflops, Errors) {
  EXPECT_THROW(achieved_gflops(eq("acoustic"), 3, 1000, 1, 0.0), Error);
  EXPECT_THROW(achieved_gflops(eq("acoustic"), 3, -1, 1, 1.0), ValidationError);
  EXPECT_THROW(achieved_gflops(eq("acoustic"), 3, 1000, 0, 1.0), ValidationError);
}

TEST(Utilization, ElasticReadings) {
  const auto stiff = utilization(94.8, gpu(), 1.5528);
  EXPECT_NEAR(stiff.utilization * 100, 40.5, 0.3);
  EXPECT_NEAR(stiff.attainable_gflops, 234.0, 0.05);
  EXPECT_NEAR(stiff.headroom_factor, 2.47, 0.01);
  EXPECT_NEAR(utilization(94.8, gpu(), 3.9375).utilization * 100, 16.0, 0.3);
}

TEST(Utilization, UnityAtAttainable) {
  for (const auto& m : registry().machines()) {
    for (double oi : {0.1, 1.375, 9.625, 50.0}) {
      const double roof = attainable_performance(m, oi).gflops;
      const auto r = utilization(roof, m, oi);
      EXPECT_EQ(r.utilization, 1.0);
      EXPECT_EQ(r.headroom_factor, 1.0);
    }
  }
  EXPECT_THROW(utilization(0.0, xeon(), 1.0), ValidationError);
}

TEST(OICurve, AcousticEndpoints) {
  const auto set = oi_curve({eq("acoustic")}, 3, 25);
  ASSERT_EQ(set.series.size(), 1u);
  const auto& s = set.series[0].samples;
  ASSERT_EQ(s.size(), 12u);
  EXPECT_EQ(s.front().k, 3);
  EXPECT_DOUBLE_EQ(s.front().oi, 1.375);
  EXPECT_EQ(s.back().k, 25);
  EXPECT_DOUBLE_EQ(s.back().oi, 9.625);
  EXPECT_TRUE(set.markers.empty());
}

TEST(OICurve, EmptyAndMarkers) {
  EXPECT_TRUE(oi_curve({}, 3, 25).series.empty());
  const auto set = oi_curve({eq("tti")}, 2, 35, registry().machines());
  EXPECT_EQ(set.series[0].samples.front().k, 3);
  EXPECT_NEAR(set.series[0].samples[2].oi, 10.0667, 1e-4);
  ASSERT_EQ(set.markers.size(), 3u);
  EXPECT_DOUBLE_EQ(set.markers[0].ridge, 9.3);
  EXPECT_THROW(oi_curve({eq("tti")}, 1, 25), RangeError);
  EXPECT_THROW(oi_curve({eq("tti")}, 3, 67), RangeError);
}

TEST(OICurve, TtiAt25) {
  const auto set = oi_curve({eq("tti")}, 25, 25);
  EXPECT_NEAR(set.series[0].samples.at(0).oi, 121.6667, 1e-4);
}

TEST(RooflineDataset, XeonAcousticPoints) {
  const auto d = roofline_dataset(xeon(), {{"acoustic-24", eq("acoustic"), 25, std::nullopt},
                                           {"acoustic-2", eq("acoustic"), 3, std::nullopt}});
  ASSERT_EQ(d.points.size(), 2u);
  EXPECT_DOUBLE_EQ(d.points[0].oi, 9.625);
  EXPECT_DOUBLE_EQ(d.points[0].attainable_gflops, 930.0);
  EXPECT_EQ(d.points[0].bound, Bound::Compute);
  EXPECT_DOUBLE_EQ(d.points[1].attainable_gflops, 137.5);
  EXPECT_EQ(d.points[1].bound, Bound::Memory);
}

TEST(RooflineDataset, RoofMeetsAtRidge) {
  const auto d = roofline_dataset(gpu(), {});
  ASSERT_EQ(d.roof.size(), 3u);
  EXPECT_DOUBLE_EQ(d.roof[1].oi, d.ridge);
  EXPECT_DOUBLE_EQ(d.roof[1].gflops, d.peak_gflops);
  EXPECT_DOUBLE_EQ(d.roof[2].gflops, d.peak_gflops);
  EXPECT_NEAR(d.roof[0].gflops / d.roof[0].oi, d.peak_bw, 1e-9);
  EXPECT_LT(d.roof[0].oi, d.ridge);
  EXPECT_GT(d.roof[2].oi, d.ridge);
}

TEST(RooflineDataset, ElasticMeasuredBelowRoof) {
  const auto d =
      roofline_dataset(gpu(), {{"elastic", eq("elastic-stiff"), 9, 94.8}});
  const auto& p = d.points.at(0);
  EXPECT_FALSE(p.exceeds_roof(0.0));
  EXPECT_NEAR(*p.measured_gflops / p.attainable_gflops, 0.405, 0.003);
}

TEST(RooflineDataset, ExceedsRoofFlag) {
  RooflinePoint p = make_point(xeon(), "x", 3, 1.375, 140.0);
  EXPECT_TRUE(p.exceeds_roof(0.01));
  EXPECT_FALSE(p.exceeds_roof(0.05));
  p.measured_gflops.reset();
  EXPECT_FALSE(p.exceeds_roof(0.0));
}

TEST(RooflineDataset, SweepCrossesRidgeBetween22And24) {
  std::vector<RooflineRequest> reqs;
  for (int order = 2; order <= 24; order += 2) {
    reqs.push_back({"acoustic:" + std::to_string(order), eq("acoustic"), order + 1, std::nullopt});
  }
  const auto d = roofline_dataset(xeon(), reqs);
  for (const auto& p : d.points) {
    EXPECT_EQ(p.bound, p.k >= 25 ? Bound::Compute : Bound::Memory) << p.label;
  }
}

TEST(RooflineDataset, Csv) {
  const auto d = roofline_dataset(gpu(), {{"elastic, stiff", eq("elastic-stiff"), 9, 94.8},
                                          {"tti", eq("tti"), 7, std::nullopt}});
  std::ostringstream out;
  write_roofline_csv(out, d);
  EXPECT_EQ(out.str(),
            "label,k,oi,attainable_gflops,bound,measured_gflops\n"
            "\"elastic, stiff\",9,1.5528,234.0095,memory,94.8000\n"
            "tti,7,10.0667,1280.9500,compute,\n");
}

TEST(ReferenceMarkers, Defaults) {
  const auto m = default_reference_markers();
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0].label, "SpMV");
}

}  // namespace
}  // namespace fdroof
