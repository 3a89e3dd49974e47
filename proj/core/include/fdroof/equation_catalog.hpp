#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdroof {

using Ratio = boost::rational<std::int64_t>;

// A discretized wave-equation kernel described by its per-point operation
// counts. kernel_flops = factor × (n_first·2k + n_second·2k
//   + n_cross·(2k² − 4k − 1) + extra_mult + extra_add − duplicates),
// unless fixed_kernel_flops overrides the symbolic count.
struct EquationSpec {
  std::string name;
  int factor = 1;
  int n_first = 0;
  int n_second = 0;
  int n_cross = 0;
  int extra_mult = 0;
  int extra_add = 0;
  int duplicates = 0;
  int fields_moved = 1;  // scalar values moved per grid point per time step
  std::optional<std::int64_t> fixed_kernel_flops;
  std::string description;

  // Count invariants plus: the symbolic FLOP count must not be negative at
  // the smallest symmetric stencil (k = 3). Throws ValidationError.
  void validate() const;
};

struct OIResult {
  std::string equation;
  int k = 0;
  std::int64_t kernel_flops = 0;
  std::int64_t bytes_per_point = 0;
  Ratio oi_exact;
  double oi = 0.0;
};

std::int64_t kernel_flops(const EquationSpec& eq, int k);
std::int64_t bytes_per_point(const EquationSpec& eq, int precision_bytes);
OIResult operational_intensity(const EquationSpec& eq, int k, int precision_bytes = 4);

// Bytes per point from loads and stores: precision × (l + 2s), or
// precision × (l + s) with streaming stores (no read-for-ownership).
std::int64_t traffic_model(int loads, int stores, bool streaming_stores, int precision_bytes);

std::vector<EquationSpec> builtin_equations();
bool is_builtin_equation(std::string_view name);

// Parses every equation document in `text`. Unknown keys, negative counts
// and a missing name are ParseErrors.
std::vector<EquationSpec> parse_equation_file(std::string_view text, const std::string& source);

class EquationCatalog {
 public:
  EquationCatalog();

  // Adding a spec whose name matches a built-in requires allow_override.
  void add(EquationSpec spec, bool allow_override = false);
  void load_string(std::string_view text, const std::string& source, bool allow_override = false);
  void load_file(const std::filesystem::path& path, bool allow_override = false);

  const EquationSpec& get(std::string_view name) const;  // throws UnknownNameError
  const EquationSpec* find(std::string_view name) const;
  const std::vector<EquationSpec>& equations() const noexcept { return equations_; }

 private:
  std::vector<EquationSpec> equations_;
};

}  // namespace fdroof
