#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdroof/machine_model.hpp"
#include "fdroof/roofline_analysis.hpp"

namespace fdroof {

struct GridDims {
  int nx = 0;
  int ny = 0;
  int nz = 0;

  std::size_t count() const noexcept {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
  }
  friend bool operator==(const GridDims&, const GridDims&) = default;
};

// Three time levels of a single-precision scalar field stored x-fastest.
// The outer `halo` cells on every face are zero padding (Dirichlet boundary)
// and are never written. Levels rotate by index; no grid is ever copied.
class Wavefield {
 public:
  Wavefield(GridDims dims, int halo);

  GridDims dims() const noexcept { return dims_; }
  int halo() const noexcept { return halo_; }
  // Number of completed steps; selects the source sample of the next step.
  int time_step() const noexcept { return time_step_; }

  std::size_t index(int x, int y, int z) const noexcept {
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(dims_.nx) *
               (static_cast<std::size_t>(y) + static_cast<std::size_t>(dims_.ny) * z);
  }
  bool is_interior(int x, int y, int z) const noexcept;
  std::size_t interior_points() const noexcept;

  // u(t), u(t-1), u(t-2) relative to the latest completed step.
  std::span<float> current() noexcept { return levels_[slot(0)]; }
  std::span<const float> current() const noexcept { return levels_[slot(0)]; }
  std::span<float> previous() noexcept { return levels_[slot(1)]; }
  std::span<const float> previous() const noexcept { return levels_[slot(1)]; }
  std::span<float> oldest() noexcept { return levels_[slot(2)]; }
  std::span<const float> oldest() const noexcept { return levels_[slot(2)]; }

  // Makes the oldest level the current one and advances time_step().
  void rotate() noexcept;

  // Sets an interior value on both u(t) and u(t-1): a field at rest.
  void set_initial(int x, int y, int z, float value);

  bool halo_is_zero() const noexcept;
  float max_abs() const noexcept;  // over u(t)

 private:
  std::size_t slot(int age) const noexcept { return static_cast<std::size_t>((head_ + 3 - age) % 3); }

  GridDims dims_;
  int halo_ = 0;
  std::array<std::vector<float>, 3> levels_;
  int head_ = 0;
  int time_step_ = 0;
};

struct PointSource {
  int x = 0;
  int y = 0;
  int z = 0;
  std::vector<float> samples;  // q(t) added after the update of step t
};

struct KernelConfig {
  int order = 2;  // even spatial order; stencil size k = order + 1
  GridDims dims;
  int n_t = 1;
  double dt = 0.5;
  double h = 1.0;
  double m = 1.0;              // constant squared slowness, used when m_grid is empty
  std::vector<float> m_grid;   // optional per-point squared slowness, x-fastest
  std::optional<PointSource> source;
  int threads = 1;             // slab parallelism over z; results are identical for any value

  int halo() const noexcept { return order / 2; }
  void validate() const;  // throws ValidationError
};

// dt bound h·sqrt(a1/a2)/v_max for second-order time (a1 = 4), with v_max
// derived from the smallest squared slowness.
double kernel_cfl_limit(const KernelConfig& cfg);
// A message when cfg.dt exceeds the CFL bound. Unstable runs are allowed.
std::optional<std::string> cfl_warning(const KernelConfig& cfg);

Wavefield make_wavefield(const KernelConfig& cfg);

// One leapfrog step u(t+1) = 2u(t) − u(t−1) + dt²/(m h²)·Σ w u(t) over the
// interior with the star Laplacian, followed by source injection.
void step(Wavefield& field, const KernelConfig& cfg);

// Same update by explicit convolution over the enumerated star geometry,
// accumulated in double. Limited to grids of at most 32³ points.
Wavefield oracle_step(const Wavefield& field, const KernelConfig& cfg);

struct BenchmarkResult {
  double wall_seconds = 0.0;
  double measured_gflops = 0.0;
  double oi = 0.0;
  RooflinePoint point;
};

// Runs cfg.n_t steps on `field` and times them.
BenchmarkResult run_benchmark(Wavefield& field, const KernelConfig& cfg,
                              const MachineSpec& machine);

// Convenience: fresh field, Ricker source at the grid centre.
BenchmarkResult run_benchmark(const KernelConfig& cfg, const MachineSpec& machine);

std::vector<float> ricker_wavelet(int n, double dt, double peak_frequency);

// Writes u(t) as little-endian float32, x-fastest, plus `<path>.dims`
// holding "nx ny nz".
void dump_wavefield(const Wavefield& field, const std::filesystem::path& path);

}  // namespace fdroof
