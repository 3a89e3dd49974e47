#include "fdroof/reference_kernel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <numbers>
#include <thread>

#include "fdroof/equation_catalog.hpp"
#include "fdroof/error.hpp"
#include "fdroof/fd_stencil.hpp"

namespace fdroof {

Wavefield::Wavefield(GridDims dims, int halo) : dims_(dims), halo_(halo) {
  if (halo < 0) throw ValidationError("halo width must be non-negative");
  for (int n : {dims.nx, dims.ny, dims.nz}) {
    if (n < 2 * halo + 1) {
      throw ValidationError(fmt::format(
          "grid dimension {} is too small for halo {} (needs >= {})", n, halo, 2 * halo + 1));
    }
  }
  for (auto& level : levels_) level.assign(dims.count(), 0.0f);
}

bool Wavefield::is_interior(int x, int y, int z) const noexcept {
  return x >= halo_ && x < dims_.nx - halo_ && y >= halo_ && y < dims_.ny - halo_ &&
         z >= halo_ && z < dims_.nz - halo_;
}

std::size_t Wavefield::interior_points() const noexcept {
  return static_cast<std::size_t>(dims_.nx - 2 * halo_) *
         static_cast<std::size_t>(dims_.ny - 2 * halo_) *
         static_cast<std::size_t>(dims_.nz - 2 * halo_);
}

void Wavefield::rotate() noexcept {
  head_ = (head_ + 1) % 3;
  ++time_step_;
}

void Wavefield::set_initial(int x, int y, int z, float value) {
  if (!is_interior(x, y, z)) throw ValidationError("initial value must be set on the interior");
  const std::size_t p = index(x, y, z);
  current()[p] = value;
  previous()[p] = value;
}

bool Wavefield::halo_is_zero() const noexcept {
  for (const auto& level : levels_) {
    for (int z = 0; z < dims_.nz; ++z) {
      for (int y = 0; y < dims_.ny; ++y) {
        for (int x = 0; x < dims_.nx; ++x) {
          if (!is_interior(x, y, z) && level[index(x, y, z)] != 0.0f) return false;
        }
      }
    }
  }
  return true;
}

float Wavefield::max_abs() const noexcept {
  float m = 0.0f;
  for (float v : current()) {
    if (std::isnan(v)) return v;
    m = std::max(m, std::fabs(v));
  }
  return m;
}

void KernelConfig::validate() const {
  if (order < 2 || order % 2 != 0 || order > kMaxAccuracyOrder) {
    throw ValidationError(fmt::format("kernel order must be even in [2, {}], got {}",
                                      kMaxAccuracyOrder, order));
  }
  if (n_t < 0) throw ValidationError("n_t must be non-negative");
  if (!(dt > 0.0) || !(h > 0.0)) throw ValidationError("dt and h must be positive");
  if (m_grid.empty()) {
    if (!(m > 0.0)) throw ValidationError("squared slowness must be positive");
  } else {
    if (m_grid.size() != dims.count()) {
      throw ValidationError("squared-slowness grid does not match grid dimensions");
    }
    if (std::any_of(m_grid.begin(), m_grid.end(), [](float v) { return !(v > 0.0f); })) {
      throw ValidationError("squared slowness must be positive everywhere");
    }
  }
  if (threads < 1) throw ValidationError("threads must be >= 1");
  const int hw = halo();
  for (int n : {dims.nx, dims.ny, dims.nz}) {
    if (n < 2 * hw + 1) throw ValidationError("grid too small for the stencil halo");
  }
  if (source) {
    const auto inside = [&](int v, int n) { return v >= hw && v < n - hw; };
    if (!inside(source->x, dims.nx) || !inside(source->y, dims.ny) ||
        !inside(source->z, dims.nz)) {
      throw ValidationError("source must lie in the grid interior");
    }
  }
}

double kernel_cfl_limit(const KernelConfig& cfg) {
  const double m_min =
      cfg.m_grid.empty() ? cfg.m : *std::min_element(cfg.m_grid.begin(), cfg.m_grid.end());
  const double v_max = 1.0 / std::sqrt(m_min);
  return cfg.h * std::sqrt(4.0 / a2_sum(cfg.order, 3)) / v_max;
}

std::optional<std::string> cfl_warning(const KernelConfig& cfg) {
  const double limit = kernel_cfl_limit(cfg);
  if (cfg.dt <= limit) return std::nullopt;
  return fmt::format("dt = {} exceeds the CFL bound {} for order {}; the run may diverge",
                     cfg.dt, limit, cfg.order);
}

Wavefield make_wavefield(const KernelConfig& cfg) { return Wavefield(cfg.dims, cfg.halo()); }

namespace {

void check_field(const Wavefield& field, const KernelConfig& cfg) {
  cfg.validate();
  if (field.dims() != cfg.dims) throw ValidationError("wavefield dimensions do not match config");
  if (field.halo() != cfg.halo()) throw ValidationError("wavefield halo does not match order");
}

void inject_source(Wavefield& field, const KernelConfig& cfg, int sample) {
  if (!cfg.source) return;
  const auto& q = cfg.source->samples;
  if (sample < 0 || static_cast<std::size_t>(sample) >= q.size()) return;
  field.current()[field.index(cfg.source->x, cfg.source->y, cfg.source->z)] += q[sample];
}

}  // namespace

void step(Wavefield& field, const KernelConfig& cfg) {
  check_field(field, cfg);
  const int r = cfg.halo();
  const std::vector<double> wd = fd_weights(2, cfg.order).as_double();
  std::vector<float> w(r + 1);
  for (int j = 0; j <= r; ++j) w[j] = static_cast<float>(wd[r + j]);
  const float center = 3.0f * w[0];
  const double dt2_h2 = cfg.dt * cfg.dt / (cfg.h * cfg.h);
  const float coef_const = static_cast<float>(dt2_h2 / cfg.m);
  const float dt2_h2_f = static_cast<float>(dt2_h2);

  const GridDims d = cfg.dims;
  const std::ptrdiff_t sy = d.nx;
  const std::ptrdiff_t sz = static_cast<std::ptrdiff_t>(d.nx) * d.ny;
  const float* cur = field.current().data();
  const float* prev = field.previous().data();
  float* out = field.oldest().data();
  const float* m_grid = cfg.m_grid.empty() ? nullptr : cfg.m_grid.data();

  const auto slab = [&](int z0, int z1) {
    for (int z = z0; z < z1; ++z) {
      for (int y = r; y < d.ny - r; ++y) {
        const std::ptrdiff_t row = field.index(0, y, z);
        for (int x = r; x < d.nx - r; ++x) {
          const std::ptrdiff_t p = row + x;
          const float c = cur[p];
          float lap = center * c;
          for (int j = 1; j <= r; ++j) {
            lap += w[j] * ((cur[p + j] + cur[p - j]) + (cur[p + j * sy] + cur[p - j * sy]) +
                           (cur[p + j * sz] + cur[p - j * sz]));
          }
          const float coef = m_grid ? dt2_h2_f / m_grid[p] : coef_const;
          out[p] = 2.0f * c - prev[p] + coef * lap;
        }
      }
    }
  };

  const int z_begin = r;
  const int z_end = d.nz - r;
  const int threads = std::min(cfg.threads, z_end - z_begin);
  if (threads <= 1) {
    slab(z_begin, z_end);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const int span = z_end - z_begin;
    for (int t = 0; t < threads; ++t) {
      const int a = z_begin + span * t / threads;
      const int b = z_begin + span * (t + 1) / threads;
      pool.emplace_back(slab, a, b);
    }
  }

  const int sample = field.time_step();
  field.rotate();
  inject_source(field, cfg, sample);
}

Wavefield oracle_step(const Wavefield& field, const KernelConfig& cfg) {
  check_field(field, cfg);
  constexpr std::size_t kMaxOraclePoints = 32 * 32 * 32;
  if (cfg.dims.count() > kMaxOraclePoints) {
    throw ValidationError("oracle_step is limited to grids of at most 32^3 points");
  }
  const StencilGeometry geometry =
      stencil_geometry(StencilKind::Star, stencil_size_for_order(cfg.order));
  const double dt2_h2 = cfg.dt * cfg.dt / (cfg.h * cfg.h);

  Wavefield next = field;
  const auto cur = field.current();
  const auto prev = field.previous();
  auto out = next.oldest();
  const GridDims d = cfg.dims;
  for (int z = 0; z < d.nz; ++z) {
    for (int y = 0; y < d.ny; ++y) {
      for (int x = 0; x < d.nx; ++x) {
        if (!field.is_interior(x, y, z)) continue;
        const std::size_t p = field.index(x, y, z);
        double lap = 0.0;
        for (const auto& s : geometry.points) {
          lap += s.weight * cur[field.index(x + s.dx, y + s.dy, z + s.dz)];
        }
        const double m = cfg.m_grid.empty() ? cfg.m : static_cast<double>(cfg.m_grid[p]);
        out[p] = static_cast<float>(2.0 * cur[p] - prev[p] + dt2_h2 / m * lap);
      }
    }
  }
  const int sample = next.time_step();
  next.rotate();
  inject_source(next, cfg, sample);
  return next;
}

std::vector<float> ricker_wavelet(int n, double dt, double peak_frequency) {
  std::vector<float> out(static_cast<std::size_t>(std::max(n, 0)));
  const double t0 = 1.0 / peak_frequency;
  const double a = std::numbers::pi * std::numbers::pi * peak_frequency * peak_frequency;
  for (int i = 0; i < n; ++i) {
    const double t = i * dt - t0;
    out[i] = static_cast<float>((1.0 - 2.0 * a * t * t) * std::exp(-a * t * t));
  }
  return out;
}

BenchmarkResult run_benchmark(Wavefield& field, const KernelConfig& cfg,
                              const MachineSpec& machine) {
  if (cfg.n_t < 1) throw ValidationError("benchmark needs at least one time step");
  check_field(field, cfg);

  const auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < cfg.n_t; ++t) step(field, cfg);
  const auto stop = std::chrono::steady_clock::now();

  BenchmarkResult r;
  r.wall_seconds = std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);

  const EquationSpec acoustic = builtin_equations().front();
  const int k = stencil_size_for_order(cfg.order);
  const OIResult oi = operational_intensity(acoustic, k, 4);
  r.oi = oi.oi;
  r.measured_gflops = static_cast<double>(field.interior_points()) *
                      static_cast<double>(oi.kernel_flops) * cfg.n_t / r.wall_seconds / 1e9;
  r.point = make_point(machine, fmt::format("acoustic:{} (measured)", cfg.order), k, r.oi,
                       r.measured_gflops);
  return r;
}

BenchmarkResult run_benchmark(const KernelConfig& cfg, const MachineSpec& machine) {
  KernelConfig c = cfg;
  if (!c.source) {
    c.source = PointSource{c.dims.nx / 2, c.dims.ny / 2, c.dims.nz / 2,
                           ricker_wavelet(c.n_t, c.dt, 0.05 / c.dt)};
  }
  Wavefield field = make_wavefield(c);
  return run_benchmark(field, c, machine);
}

void dump_wavefield(const Wavefield& field, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  for (float v : field.current()) {
    // Byte extraction from the integer value is little-endian on any host.
    const auto bits = std::bit_cast<std::uint32_t>(v);
    const char bytes[4] = {static_cast<char>(bits & 0xff), static_cast<char>((bits >> 8) & 0xff),
                           static_cast<char>((bits >> 16) & 0xff),
                           static_cast<char>((bits >> 24) & 0xff)};
    out.write(bytes, 4);
  }
  if (!out) throw Error("failed writing '" + path.string() + "'");
  std::ofstream sidecar(path.string() + ".dims");
  if (!sidecar) throw Error("cannot write '" + path.string() + ".dims'");
  const GridDims d = field.dims();
  sidecar << d.nx << ' ' << d.ny << ' ' << d.nz << '\n';
}

}  // namespace fdroof
