#include "fdroof/machine_model.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>

#include "fdroof/error.hpp"
#include "fdroof/kv_document.hpp"

namespace fdroof {

namespace {

void require_positive(double v, std::string_view what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(what) + " must be positive and finite");
  }
}

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// The shortest decimal that round-trips to `v`, as an exact rational.
cpp_rational decimal_value(double v) {
  std::string text = fmt::format("{}", v);
  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stoi(text.substr(e + 1));
    text.erase(e);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    exponent -= static_cast<int>(text.size() - dot - 1);
    text.erase(dot, 1);
  }
  // A leading zero would make cpp_int read the digits as octal.
  text.erase(0, std::min(text.find_first_not_of('0'), text.size() - 1));
  cpp_rational value{cpp_int(text)};
  const cpp_int scale = boost::multiprecision::pow(cpp_int(10), std::abs(exponent));
  if (exponent >= 0) return value * scale;
  return value / scale;
}

// Product of decimal hardware figures, rounded once. 2.7 GHz × 384 is
// 1036.8, not the 1036.8000000000002 that binary multiplication gives.
double decimal_product(std::initializer_list<double> factors, const cpp_rational& divisor = 1) {
  cpp_rational p = 1;
  for (double f : factors) p *= decimal_value(f);
  return static_cast<double>(p / divisor);
}

}  // namespace

void ArchParams::validate() const {
  require_positive(simd_lanes_sp, "arch.simd_lanes_sp");
  require_positive(cores, "arch.cores");
  require_positive(sockets, "arch.sockets");
  require_positive(clock_ghz, "arch.clock_ghz");
  if (fma_ops_per_cycle != 1 && fma_ops_per_cycle != 2) {
    throw ValidationError("arch.fma_ops_per_cycle must be 1 or 2");
  }
}

void MemParams::validate() const {
  require_positive(transfer_rate_mts, "mem.transfer_rate_mts");
  require_positive(channels, "mem.channels");
  require_positive(bytes_per_channel, "mem.bytes_per_channel");
  require_positive(sockets, "mem.sockets");
}

void MachineSpec::validate() const {
  if (name.empty()) throw ValidationError("machine name must not be empty");
  const std::string ctx = "machine '" + name + "': ";
  try {
    require_positive(peak_gflops_theoretical, "peak_gflops_theoretical");
    require_positive(peak_bw_theoretical, "peak_bw_theoretical");
    if (peak_gflops_achievable) require_positive(*peak_gflops_achievable, "peak_gflops_achievable");
    if (peak_bw_achievable) require_positive(*peak_bw_achievable, "peak_bw_achievable");
    if (arch) arch->validate();
    if (mem) mem->validate();
  } catch (const ValidationError& e) {
    throw ValidationError(ctx + e.what());
  }
  if (peak_gflops_achievable && *peak_gflops_achievable > peak_gflops_theoretical) {
    throw ValidationError(ctx + "achievable GFLOPS exceeds theoretical peak");
  }
  if (peak_bw_achievable && *peak_bw_achievable > peak_bw_theoretical) {
    throw ValidationError(ctx + "achievable bandwidth exceeds theoretical peak");
  }
  if (precision_bytes != 4 && precision_bytes != 8) {
    throw ValidationError(ctx + "precision_bytes must be 4 or 8");
  }
}

RatePair achievable_hint(const MachineSpec& machine) noexcept {
  return {machine.peak_gflops_theoretical * kAchievableHintFraction,
          machine.peak_bw_theoretical * kAchievableHintFraction};
}

double theoretical_peak_flops(const ArchParams& arch) {
  arch.validate();
  return decimal_product({static_cast<double>(arch.simd_lanes_sp),
                          static_cast<double>(arch.fma_ops_per_cycle),
                          static_cast<double>(arch.cores), static_cast<double>(arch.sockets),
                          arch.clock_ghz});
}

double theoretical_peak_bandwidth(const MemParams& mem) {
  mem.validate();
  // MT/s × bytes = MB/s; 1 GB/s = 1000 MB/s.
  return decimal_product({mem.transfer_rate_mts, static_cast<double>(mem.channels),
                          static_cast<double>(mem.bytes_per_channel),
                          static_cast<double>(mem.sockets)},
                         1000);
}

double ridge_point(const MachineSpec& machine) {
  if (!machine.has_achievable_rates()) throw UnknownRatesError(machine.name);
  return *machine.peak_gflops_achievable / *machine.peak_bw_achievable;
}

std::string_view to_string(Bound b) noexcept {
  return b == Bound::Compute ? "compute" : "memory";
}

Bound classify(const MachineSpec& machine, double oi) {
  return oi >= ridge_point(machine) ? Bound::Compute : Bound::Memory;
}

Attainable attainable_performance(const MachineSpec& machine, double oi) {
  if (!(oi >= 0.0)) throw ValidationError("operational intensity must be non-negative");
  const double ridge = ridge_point(machine);
  const double peak = *machine.peak_gflops_achievable;
  if (oi >= ridge) return {peak, Bound::Compute};
  return {std::min(oi * *machine.peak_bw_achievable, peak), Bound::Memory};
}

std::vector<MachineSpec> builtin_machines() {
  std::vector<MachineSpec> out;

  {
    MachineSpec m;
    m.name = "xeon-e5-2697v2-2s";
    m.arch = ArchParams{8, 2, 12, 2, 2.7};
    m.mem = MemParams{1866.0, 4, 8, 2};
    m.peak_gflops_theoretical = theoretical_peak_flops(*m.arch);
    m.peak_bw_theoretical = theoretical_peak_bandwidth(*m.mem);
    m.peak_bw_achievable = 100.0;
    m.peak_gflops_achievable = 930.0;
    m.notes =
        "Dual-socket Intel Xeon E5-2697 v2, 12 cores @ 2.7 GHz, AVX + FMA, DDR3-1866 x4 "
        "channels per socket. Achievable rates give I_min = 9.3 FLOPs/byte.";
    out.push_back(std::move(m));
  }
  {
    MachineSpec m;
    m.name = "phi-7120a";
    m.arch = ArchParams{16, 2, 61, 1, 1.238};
    m.mem = MemParams{5500.0, 16, 4, 1};
    m.peak_gflops_theoretical = theoretical_peak_flops(*m.arch);
    m.peak_bw_theoretical = theoretical_peak_bandwidth(*m.mem);
    m.peak_bw_achievable = 200.0;
    m.peak_gflops_achievable = 2178.0;
    m.notes =
        "Intel Xeon Phi 7120A, 61 cores @ 1.238 GHz, 512-bit SIMD, GDDR5 16 channels. "
        "Achievable rates give I_min = 10.89 FLOPs/byte.";
    out.push_back(std::move(m));
  }
  {
    MachineSpec m;
    m.name = "gtx480";
    m.arch = ArchParams{32, 2, 15, 1, 1.401};
    m.mem = MemParams{3696.0, 6, 8, 1};
    m.peak_gflops_theoretical = theoretical_peak_flops(*m.arch);
    m.peak_bw_theoretical = theoretical_peak_bandwidth(*m.mem);
    m.peak_bw_achievable = 150.7;
    m.peak_gflops_achievable = 1280.95;
    m.notes =
        "NVIDIA GTX480, 15 SMs x 32 lanes @ 1.401 GHz, 384-bit GDDR5. Measured 150.7 GB/s; "
        "ridge point 8.5 is an assumed value inside the interval consistent with the "
        "published minimum orders.";
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 7> kMachineKeys = {
    "name",  "peak_gflops_theoretical", "peak_bw_theoretical", "peak_gflops_achievable",
    "peak_bw_achievable", "precision_bytes", "notes"};
constexpr std::array<std::string_view, 2> kMachinePrefixes = {"arch.", "mem."};
constexpr std::array<std::string_view, 5> kArchKeys = {"simd_lanes_sp", "fma_ops_per_cycle",
                                                       "cores", "sockets", "clock_ghz"};
constexpr std::array<std::string_view, 4> kMemKeys = {"transfer_rate_mts", "channels",
                                                      "bytes_per_channel", "sockets"};

template <typename Keys>
void require_exact_children(const KvDocument& doc, std::string_view prefix, const Keys& keys) {
  for (const auto& [key, entry] : doc.children(prefix)) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError(doc.source(), entry.line,
                       "unknown key '" + std::string(prefix) + "." + key + "'");
    }
  }
  for (auto key : keys) {
    const std::string full = std::string(prefix) + "." + std::string(key);
    if (!doc.has(full)) {
      throw ParseError(doc.source(), doc.line(), "missing key '" + full + "'");
    }
  }
}

int get_count(const KvDocument& doc, const std::string& key) {
  return static_cast<int>(*doc.get_int(key));
}

// Applies the keys of `doc` on top of `m`.
void apply_document(const KvDocument& doc, MachineSpec& m) {
  doc.require_known_keys(kMachineKeys, kMachinePrefixes);

  if (doc.has_prefix("arch")) {
    if (doc.has("peak_gflops_theoretical")) {
      doc.fail("peak_gflops_theoretical", "conflicts with arch.* (theoretical peak is computed)");
    }
    require_exact_children(doc, "arch", kArchKeys);
    m.arch = ArchParams{get_count(doc, "arch.simd_lanes_sp"),
                        get_count(doc, "arch.fma_ops_per_cycle"), get_count(doc, "arch.cores"),
                        get_count(doc, "arch.sockets"), *doc.get_double("arch.clock_ghz")};
  }
  if (doc.has_prefix("mem")) {
    if (doc.has("peak_bw_theoretical")) {
      doc.fail("peak_bw_theoretical", "conflicts with mem.* (theoretical peak is computed)");
    }
    require_exact_children(doc, "mem", kMemKeys);
    m.mem = MemParams{*doc.get_double("mem.transfer_rate_mts"), get_count(doc, "mem.channels"),
                      get_count(doc, "mem.bytes_per_channel"), get_count(doc, "mem.sockets")};
  }

  try {
    if (doc.has_prefix("arch")) m.peak_gflops_theoretical = theoretical_peak_flops(*m.arch);
    if (doc.has_prefix("mem")) m.peak_bw_theoretical = theoretical_peak_bandwidth(*m.mem);
  } catch (const ValidationError& e) {
    throw ParseError(doc.source(), doc.line(), e.what());
  }
  if (auto v = doc.get_double("peak_gflops_theoretical")) {
    m.peak_gflops_theoretical = *v;
    m.arch.reset();
  }
  if (auto v = doc.get_double("peak_bw_theoretical")) {
    m.peak_bw_theoretical = *v;
    m.mem.reset();
  }
  if (auto v = doc.get_double("peak_gflops_achievable")) m.peak_gflops_achievable = *v;
  if (auto v = doc.get_double("peak_bw_achievable")) m.peak_bw_achievable = *v;
  if (auto v = doc.get_int("precision_bytes")) m.precision_bytes = static_cast<int>(*v);
  if (auto v = doc.get_string("notes")) m.notes = *v;
}

MachineSpec validated(MachineSpec m, const KvDocument& doc) {
  try {
    m.validate();
  } catch (const ValidationError& e) {
    throw ParseError(doc.source(), doc.line(), e.what());
  }
  return m;
}

}  // namespace

std::vector<MachineSpec> parse_machines(std::string_view text, const std::string& source) {
  std::vector<MachineSpec> out;
  for (const auto& doc : parse_kv_documents(text, source)) {
    auto name = doc.get_string("name");
    if (!name || name->empty()) throw ParseError(source, doc.line(), "missing key 'name'");
    MachineSpec m;
    m.name = *name;
    apply_document(doc, m);
    out.push_back(validated(std::move(m), doc));
  }
  return out;
}

MachineRegistry::MachineRegistry() : machines_(builtin_machines()) {}

const MachineSpec* MachineRegistry::find(std::string_view name) const {
  auto it = std::find_if(machines_.begin(), machines_.end(),
                         [&](const MachineSpec& m) { return m.name == name; });
  return it == machines_.end() ? nullptr : &*it;
}

const MachineSpec& MachineRegistry::get(std::string_view name) const {
  if (const MachineSpec* m = find(name)) return *m;
  throw UnknownNameError("machine", std::string(name));
}

void MachineRegistry::add(MachineSpec spec, bool user_defined) {
  spec.validate();
  if (user_defined) {
    if (std::find(user_names_.begin(), user_names_.end(), spec.name) != user_names_.end()) {
      throw ConflictError("machine '" + spec.name + "' is defined more than once");
    }
    user_names_.push_back(spec.name);
  }
  auto it = std::find_if(machines_.begin(), machines_.end(),
                         [&](const MachineSpec& m) { return m.name == spec.name; });
  if (it != machines_.end()) {
    *it = std::move(spec);
  } else {
    machines_.push_back(std::move(spec));
  }
}

void MachineRegistry::load_string(std::string_view text, const std::string& source) {
  for (const auto& doc : parse_kv_documents(text, source)) {
    auto name = doc.get_string("name");
    if (!name || name->empty()) throw ParseError(source, doc.line(), "missing key 'name'");
    if (std::find(user_names_.begin(), user_names_.end(), *name) != user_names_.end()) {
      throw ConflictError(source + ":" + std::to_string(doc.line()) + ": machine '" + *name +
                          "' is defined more than once");
    }
    // A document naming an existing machine overrides only the keys it sets.
    MachineSpec m;
    if (const MachineSpec* existing = find(*name)) {
      m = *existing;
    } else {
      m.name = *name;
    }
    apply_document(doc, m);
    add(validated(std::move(m), doc));
  }
}

void MachineRegistry::load_file(const std::filesystem::path& path) {
  load_string(read_text_file(path), path.string());
}

}  // namespace fdroof
