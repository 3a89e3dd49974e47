#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fdroof/error.hpp"
#include "fdroof/machine_model.hpp"

namespace fdroof {
namespace {

const MachineSpec& machine(const MachineRegistry& r, std::string_view name) { return r.get(name); }

TEST(PeakDerivation, TheoreticalFlops) {
  EXPECT_EQ(theoretical_peak_flops({8, 2, 12, 2, 2.7}), 1036.8);
  EXPECT_DOUBLE_EQ(theoretical_peak_flops({1, 1, 1, 1, 1.0}), 1.0);
  EXPECT_NEAR(theoretical_peak_flops({16, 2, 61, 1, 1.238}), 2416.58, 0.005);
}

TEST(PeakDerivation, TheoreticalBandwidth) {
  EXPECT_NEAR(theoretical_peak_bandwidth({1866, 4, 8, 2}), 119.4, 0.1);
  EXPECT_DOUBLE_EQ(theoretical_peak_bandwidth({1000, 1, 1, 1}), 1.0);
  EXPECT_NEAR(theoretical_peak_bandwidth({2133, 4, 8, 1}), 68.256, 1e-9);
}

TEST(PeakDerivation, DoublingSocketsDoublesPeaks) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> count(1, 64);
  std::uniform_real_distribution<double> clock(0.5, 4.0);
  for (int i = 0; i < 100; ++i) {
    ArchParams a{count(rng), 1 + (count(rng) % 2), count(rng), count(rng), clock(rng)};
    ArchParams a2 = a;
    a2.sockets *= 2;
    EXPECT_NEAR(theoretical_peak_flops(a2), 2.0 * theoretical_peak_flops(a),
                1e-12 * theoretical_peak_flops(a2));
    MemParams m{clock(rng) * 1000.0, count(rng), count(rng), count(rng)};
    MemParams m2 = m;
    m2.sockets *= 2;
    EXPECT_NEAR(theoretical_peak_bandwidth(m2), 2.0 * theoretical_peak_bandwidth(m),
                1e-12 * theoretical_peak_bandwidth(m2));
  }
}

TEST(PeakDerivation, RejectsInvalidParams) {
  EXPECT_THROW(theoretical_peak_flops({8, 3, 12, 2, 2.7}), ValidationError);
  EXPECT_THROW(theoretical_peak_flops({0, 2, 12, 2, 2.7}), ValidationError);
  EXPECT_THROW(theoretical_peak_bandwidth({1866, 4, 8, 0}), ValidationError);
}

TEST(RidgePoint, BuiltinMachines) {
  const MachineRegistry r;
  EXPECT_NEAR(ridge_point(machine(r, "xeon-e5-2697v2-2s")), 9.3, 1e-12);
  EXPECT_NEAR(ridge_point(machine(r, "phi-7120a")), 10.89, 1e-12);
  EXPECT_NEAR(ridge_point(machine(r, "gtx480")), 8.5, 1e-12);
}

TEST(RidgePoint, EqualRatesGiveOne) {
  MachineSpec m;
  m.name = "equal";
  m.peak_gflops_theoretical = m.peak_bw_theoretical = 50.0;
  m.peak_gflops_achievable = m.peak_bw_achievable = 42.0;
  EXPECT_DOUBLE_EQ(ridge_point(m), 1.0);
}

TEST(RidgePoint, MissingAchievableRatesIsExplicitError) {
  MachineSpec m;
  m.name = "bare";
  m.peak_gflops_theoretical = 100.0;
  m.peak_bw_theoretical = 10.0;
  EXPECT_THROW(ridge_point(m), UnknownRatesError);
  try {
    ridge_point(m);
  } catch (const UnknownRatesError& e) {
    EXPECT_NE(std::string(e.what()).find("unachievable-rates-unknown"), std::string::npos);
  }
  const RatePair hint = achievable_hint(m);
  EXPECT_DOUBLE_EQ(hint.gflops, 80.0);
  EXPECT_DOUBLE_EQ(hint.bw, 8.0);
}

TEST(Attainable, Examples) {
  const MachineRegistry r;
  const auto& xeon = machine(r, "xeon-e5-2697v2-2s");
  auto a = attainable_performance(xeon, 1.375);
  EXPECT_DOUBLE_EQ(a.gflops, 137.5);
  EXPECT_EQ(a.bound, Bound::Memory);
  a = attainable_performance(xeon, 100.0);
  EXPECT_DOUBLE_EQ(a.gflops, 930.0);
  EXPECT_EQ(a.bound, Bound::Compute);
  EXPECT_NEAR(attainable_performance(machine(r, "gtx480"), 1.5528).gflops, 234.0, 0.05);
  EXPECT_THROW(attainable_performance(xeon, -1.0), ValidationError);
}

TEST(Attainable, RooflineProperties) {
  const MachineRegistry r;
  for (const auto& m : r.machines()) {
    const double ridge = ridge_point(m);
    const double peak = *m.peak_gflops_achievable;
    EXPECT_NEAR(attainable_performance(m, ridge).gflops, peak, 1e-12 * peak);
    double prev = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double oi = i * 0.01;
      const Attainable a = attainable_performance(m, oi);
      EXPECT_GE(a.gflops, prev);
      // Continuity: steps bounded by slope × Δoi.
      EXPECT_LE(a.gflops - prev, *m.peak_bw_achievable * 0.01 + 1e-9);
      if (oi >= ridge) EXPECT_DOUBLE_EQ(a.gflops, peak);
      EXPECT_EQ(a.bound == Bound::Compute, oi >= ridge);
      EXPECT_EQ(classify(m, oi), a.bound);
      prev = a.gflops;
    }
  }
}

TEST(Registry, EmptyFileKeepsBuiltins) {
  MachineRegistry r;
  r.load_string("", "empty.yaml");
  EXPECT_EQ(r.size(), 3u);
  r.load_string("# just a comment\n", "comment.yaml");
  EXPECT_EQ(r.size(), 3u);
}

TEST(Registry, OverrideBuiltinByName) {
  MachineRegistry r;
  r.load_string("name: gtx480\npeak_bw_achievable: 150.7\n", "gpu.yaml");
  EXPECT_DOUBLE_EQ(*r.get("gtx480").peak_bw_achievable, 150.7);
  EXPECT_EQ(r.size(), 3u);

  MachineRegistry r2;
  r2.load_string("name: gtx480\npeak_bw_achievable: 140\npeak_gflops_achievable: 1190\n",
                 "gpu.yaml");
  EXPECT_DOUBLE_EQ(*r2.get("gtx480").peak_bw_achievable, 140.0);
  EXPECT_DOUBLE_EQ(ridge_point(r2.get("gtx480")), 8.5);
}

TEST(Registry, NewMachineFromArchAndMem) {
  MachineRegistry r;
  r.load_string(R"(
name: ddr4-box
arch:
  simd_lanes_sp: 16
  fma_ops_per_cycle: 2
  cores: 8
  sockets: 1
  clock_ghz: 2.0
mem:
  transfer_rate_mts: 2133
  channels: 4
  bytes_per_channel: 8
  sockets: 1
peak_gflops_achievable: 400
peak_bw_achievable: 55
notes: test box
)",
                "box.yaml");
  const auto& m = r.get("ddr4-box");
  EXPECT_DOUBLE_EQ(m.peak_gflops_theoretical, 512.0);
  EXPECT_NEAR(m.peak_bw_theoretical, 68.256, 1e-9);
  EXPECT_EQ(r.size(), 4u);
}

TEST(Registry, FlatDottedKeysAreAccepted) {
  MachineRegistry r;
  r.load_string(
      "name: flat\narch.simd_lanes_sp: 1\narch.fma_ops_per_cycle: 1\narch.cores: 1\n"
      "arch.sockets: 1\narch.clock_ghz: 1.0\npeak_bw_theoretical: 1\n",
      "flat.yaml");
  EXPECT_DOUBLE_EQ(r.get("flat").peak_gflops_theoretical, 1.0);
  EXPECT_FALSE(r.get("flat").has_achievable_rates());
}

TEST(Registry, NegativeBandwidthIsValidationError) {
  MachineRegistry r;
  EXPECT_THROW(r.load_string("name: gtx480\npeak_bw_achievable: -5\n", "bad.yaml"),
               ValidationError);
  EXPECT_THROW(r.load_string("name: x\npeak_gflops_theoretical: 10\npeak_bw_theoretical: -1\n",
                             "bad.yaml"),
               ValidationError);
}

TEST(Registry, AchievableAboveTheoreticalRejected) {
  MachineRegistry r;
  EXPECT_THROW(r.load_string("name: xeon-e5-2697v2-2s\npeak_bw_achievable: 500\n", "bad.yaml"),
               ValidationError);
}

TEST(Registry, MalformedFileReportsLine) {
  MachineRegistry r;
  try {
    r.load_string("name: a\npeak_gflops_theoretical: 1\n  bad: [indent\n", "broken.yaml");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    ASSERT_TRUE(e.line().has_value());
    EXPECT_GE(*e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("broken.yaml:"), std::string::npos);
  }
  try {
    r.load_string("name: a\npeak_gflops_theoretical: 1\npeak_bw_theoretical: 1\nbogus: 3\n",
                  "keys.yaml");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(r.load_string("name: a\npeak_gflops_theoretical: fast\n", "num.yaml"), ParseError);
}

TEST(Registry, DuplicateNameIsConflict) {
  MachineRegistry r;
  const char* text =
      "name: dup\npeak_gflops_theoretical: 10\npeak_bw_theoretical: 1\n---\n"
      "name: dup\npeak_gflops_theoretical: 20\npeak_bw_theoretical: 2\n";
  EXPECT_THROW(r.load_string(text, "dup.yaml"), ConflictError);
}

TEST(Registry, ArchConflictsWithExplicitTheoretical) {
  MachineRegistry r;
  EXPECT_THROW(r.load_string("name: c\npeak_gflops_theoretical: 5\narch:\n  simd_lanes_sp: 1\n"
                             "  fma_ops_per_cycle: 1\n  cores: 1\n  sockets: 1\n  clock_ghz: 1\n"
                             "peak_bw_theoretical: 1\n",
                             "c.yaml"),
               ParseError);
}

TEST(Registry, UnknownMachine) {
  const MachineRegistry r;
  EXPECT_THROW(r.get("nope"), UnknownNameError);
  EXPECT_EQ(r.find("nope"), nullptr);
}

}  // namespace
}  // namespace fdroof
