#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdroof {

// Architectural parameters behind a theoretical peak FLOP rate.
struct ArchParams {
  int simd_lanes_sp = 1;
  int fma_ops_per_cycle = 1;  // 1 without fused multiply-add, 2 with it
  int cores = 1;
  int sockets = 1;
  double clock_ghz = 1.0;

  void validate() const;
};

// Memory-system parameters behind a theoretical peak bandwidth.
struct MemParams {
  double transfer_rate_mts = 1.0;  // mega-transfers per second
  int channels = 1;
  int bytes_per_channel = 1;
  int sockets = 1;

  void validate() const;
};

// Fraction of theoretical peak usually reachable in practice. Only used as a
// hint when a machine has theoretical rates but no measured ones.
inline constexpr double kAchievableHintFraction = 0.8;

struct MachineSpec {
  std::string name;
  double peak_gflops_theoretical = 0.0;
  double peak_bw_theoretical = 0.0;
  std::optional<double> peak_gflops_achievable;
  std::optional<double> peak_bw_achievable;
  int precision_bytes = 4;
  std::string notes;
  std::optional<ArchParams> arch;
  std::optional<MemParams> mem;

  bool has_achievable_rates() const noexcept {
    return peak_gflops_achievable.has_value() && peak_bw_achievable.has_value();
  }
  // Throws ValidationError on any invariant violation.
  void validate() const;
};

struct RatePair {
  double gflops = 0.0;
  double bw = 0.0;
};

// kAchievableHintFraction of the theoretical peaks.
RatePair achievable_hint(const MachineSpec& machine) noexcept;

// simd_lanes × fma × cores × sockets × clock, in GFLOPS.
double theoretical_peak_flops(const ArchParams& arch);
// transfer rate × channels × bytes per channel × sockets, in GB/s.
double theoretical_peak_bandwidth(const MemParams& mem);

// I_min = achievable GFLOPS / achievable GB/s. Throws UnknownRatesError
// when the machine has no achievable rates.
double ridge_point(const MachineSpec& machine);

enum class Bound { Memory, Compute };

std::string_view to_string(Bound b) noexcept;

struct Attainable {
  double gflops = 0.0;
  Bound bound = Bound::Memory;
};

Bound classify(const MachineSpec& machine, double oi);

// Roofline: min(oi × B, F) with boundedness class. Requires oi >= 0.
Attainable attainable_performance(const MachineSpec& machine, double oi);

// Reference machines. Their achievable rates are chosen to reproduce the
// published ridge points (9.3 and 10.89 FLOPs/byte) and the GPU's 150.7 GB/s.
std::vector<MachineSpec> builtin_machines();

// Name-indexed machine collection. Built-ins are always present; user
// documents may override a built-in by name, but one name defined twice by
// user files is a ConflictError.
class MachineRegistry {
 public:
  MachineRegistry();

  static MachineRegistry with_builtins() { return MachineRegistry(); }

  void load_string(std::string_view text, const std::string& source);
  void load_file(const std::filesystem::path& path);
  void add(MachineSpec spec, bool user_defined = true);

  const MachineSpec& get(std::string_view name) const;  // throws UnknownNameError
  const MachineSpec* find(std::string_view name) const;
  const std::vector<MachineSpec>& machines() const noexcept { return machines_; }
  std::size_t size() const noexcept { return machines_.size(); }

 private:
  std::vector<MachineSpec> machines_;
  std::vector<std::string> user_names_;
};

// Parses machine documents without touching any registry.
std::vector<MachineSpec> parse_machines(std::string_view text, const std::string& source);

}  // namespace fdroof
