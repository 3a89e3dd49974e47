#include "fdroof/equation_catalog.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>

#include "fdroof/error.hpp"
#include "fdroof/fd_stencil.hpp"
#include "fdroof/kv_document.hpp"

namespace fdroof {

namespace {

std::int64_t symbolic_flops(const EquationSpec& eq, int k) {
  const std::int64_t per_axis = derivative_flops(DerivativeKind::SecondAxis, k);
  const std::int64_t first = derivative_flops(DerivativeKind::FirstAxis, k);
  const std::int64_t cross = derivative_flops(DerivativeKind::SecondCross, k);
  return eq.factor * (eq.n_first * first + eq.n_second * per_axis + eq.n_cross * cross +
                      eq.extra_mult + eq.extra_add - eq.duplicates);
}

void check_precision(int precision_bytes) {
  if (precision_bytes != 4 && precision_bytes != 8) {
    throw ValidationError(fmt::format("precision must be 4 or 8 bytes, got {}", precision_bytes));
  }
}

}  // namespace

void EquationSpec::validate() const {
  if (name.empty()) throw ValidationError("equation name must not be empty");
  const std::string ctx = "equation '" + name + "': ";
  if (factor < 1) throw ValidationError(ctx + "factor must be >= 1");
  for (int v : {n_first, n_second, n_cross, extra_mult, extra_add, duplicates}) {
    if (v < 0) throw ValidationError(ctx + "operation counts must be >= 0");
  }
  if (fields_moved < 1) throw ValidationError(ctx + "fields_moved must be >= 1");
  if (fixed_kernel_flops) {
    if (*fixed_kernel_flops < 1) throw ValidationError(ctx + "fixed_kernel_flops must be >= 1");
  } else if (symbolic_flops(*this, 3) < 0) {
    throw ValidationError(ctx + "negative FLOP count: duplicates exceed the counted operations");
  }
}

std::int64_t kernel_flops(const EquationSpec& eq, int k) {
  if (eq.fixed_kernel_flops) return *eq.fixed_kernel_flops;
  const std::int64_t flops = symbolic_flops(eq, k);
  if (flops < 0) {
    throw ValidationError(
        fmt::format("equation '{}': negative FLOP count at k = {}", eq.name, k));
  }
  return flops;
}

std::int64_t bytes_per_point(const EquationSpec& eq, int precision_bytes) {
  check_precision(precision_bytes);
  return static_cast<std::int64_t>(eq.fields_moved) * precision_bytes;
}

OIResult operational_intensity(const EquationSpec& eq, int k, int precision_bytes) {
  OIResult r;
  r.equation = eq.name;
  r.k = k;
  r.kernel_flops = kernel_flops(eq, k);
  r.bytes_per_point = bytes_per_point(eq, precision_bytes);
  r.oi_exact = Ratio(r.kernel_flops, r.bytes_per_point);
  r.oi = static_cast<double>(r.kernel_flops) / static_cast<double>(r.bytes_per_point);
  return r;
}

std::int64_t traffic_model(int loads, int stores, bool streaming_stores, int precision_bytes) {
  if (loads < 0 || stores < 0 || loads + stores < 1) {
    throw ValidationError("traffic model needs l >= 0, s >= 0 and l + s >= 1");
  }
  check_precision(precision_bytes);
  const std::int64_t values = streaming_stores ? loads + stores : loads + 2 * stores;
  return values * precision_bytes;
}

std::vector<EquationSpec> builtin_equations() {
  std::vector<EquationSpec> out;

  EquationSpec acoustic;
  acoustic.name = "acoustic";
  acoustic.n_second = 3;
  acoustic.extra_mult = 3;
  acoustic.extra_add = 5;
  acoustic.duplicates = 4;
  acoustic.fields_moved = 4;
  acoustic.description =
      "Acoustic wave equation m d2u/dt2 - laplace(u) = q; m squared slowness, u wavefield, "
      "q source. Moves m, u(t-1), u(t-2) and writes u(t).";
  out.push_back(acoustic);

  EquationSpec vti;
  vti.name = "vti";
  vti.factor = 2;
  vti.n_second = 3;
  vti.extra_mult = 5;
  vti.extra_add = 5;
  vti.duplicates = 2;
  vti.fields_moved = 9;
  vti.description =
      "Vertical transversely isotropic pseudo-acoustic system coupling wavefields p and r "
      "through Thomsen parameters epsilon and delta. Moves m, epsilon, delta, two time levels "
      "of p and r, and writes p(t), r(t).";
  out.push_back(vti);

  EquationSpec tti;
  tti.name = "tti";
  tti.factor = 2;
  tti.n_second = 3;
  tti.n_cross = 3;
  tti.extra_mult = 44;
  tti.extra_add = 17;
  tti.duplicates = 8;
  tti.fields_moved = 15;
  tti.description =
      "Tilted transversely isotropic system: VTI rotated by tilt theta and azimuth phi. The "
      "six sin/cos terms of the angles are precomputed loads.";
  out.push_back(tti);

  const auto elastic = [](std::string name, int fields, std::string stiffness) {
    EquationSpec e;
    e.name = std::move(name);
    e.fields_moved = fields;
    e.fixed_kernel_flops = 441;
    e.description =
        "3D anisotropic elastic wave equation rho d2u_i/dt2 = d sigma_ij/dx_j + F_i with "
        "sigma_ij = c_ijkl eps_kl, 8th-order first derivatives; 441 FLOPs per point. " +
        std::move(stiffness);
    return e;
  };
  out.push_back(elastic("elastic-stiff", 6 + 1 + 64,
                        "Spatially varying stiffness: 64 c_ijkl components per point."));
  out.push_back(elastic("elastic-symmetric", 6 + 1 + 21,
                        "Symmetric stiffness: 21 independent components per point."));
  out.push_back(elastic("elastic-const", 6 + 1,
                        "Constant stiffness tensor: only displacement and density move."));
  return out;
}

bool is_builtin_equation(std::string_view name) {
  static const std::vector<EquationSpec> builtins = builtin_equations();
  return std::any_of(builtins.begin(), builtins.end(),
                     [&](const EquationSpec& e) { return e.name == name; });
}

namespace {

constexpr std::array<std::string_view, 11> kEquationKeys = {
    "name",      "factor",     "n_first",    "n_second",           "n_cross",    "extra_mult",
    "extra_add", "duplicates", "fields_moved", "fixed_kernel_flops", "description"};

}  // namespace

std::vector<EquationSpec> parse_equation_file(std::string_view text, const std::string& source) {
  std::vector<EquationSpec> out;
  for (const auto& doc : parse_kv_documents(text, source)) {
    doc.require_known_keys(kEquationKeys);
    auto name = doc.get_string("name");
    if (!name || name->empty()) throw ParseError(source, doc.line(), "missing key 'name'");

    EquationSpec eq;
    eq.name = *name;
    const auto count = [&](std::string_view key, int& field) {
      if (auto v = doc.get_int(key)) {
        if (*v < 0) doc.fail(key, "must not be negative");
        field = static_cast<int>(*v);
      }
    };
    count("factor", eq.factor);
    count("n_first", eq.n_first);
    count("n_second", eq.n_second);
    count("n_cross", eq.n_cross);
    count("extra_mult", eq.extra_mult);
    count("extra_add", eq.extra_add);
    count("duplicates", eq.duplicates);
    count("fields_moved", eq.fields_moved);
    if (auto v = doc.get_int("fixed_kernel_flops")) eq.fixed_kernel_flops = *v;
    if (auto v = doc.get_string("description")) eq.description = *v;

    try {
      eq.validate();
    } catch (const ValidationError& e) {
      throw ParseError(source, doc.line(), e.what());
    }
    out.push_back(std::move(eq));
  }
  return out;
}

EquationCatalog::EquationCatalog() : equations_(builtin_equations()) {}

const EquationSpec* EquationCatalog::find(std::string_view name) const {
  auto it = std::find_if(equations_.begin(), equations_.end(),
                         [&](const EquationSpec& e) { return e.name == name; });
  return it == equations_.end() ? nullptr : &*it;
}

const EquationSpec& EquationCatalog::get(std::string_view name) const {
  if (const EquationSpec* e = find(name)) return *e;
  throw UnknownNameError("equation", std::string(name));
}

void EquationCatalog::add(EquationSpec spec, bool allow_override) {
  spec.validate();
  auto it = std::find_if(equations_.begin(), equations_.end(),
                         [&](const EquationSpec& e) { return e.name == spec.name; });
  if (it == equations_.end()) {
    equations_.push_back(std::move(spec));
    return;
  }
  if (!allow_override) {
    throw ConflictError("equation '" + spec.name +
                        "' already exists; overriding it requires an explicit override flag");
  }
  *it = std::move(spec);
}

void EquationCatalog::load_string(std::string_view text, const std::string& source,
                                  bool allow_override) {
  for (auto& eq : parse_equation_file(text, source)) add(std::move(eq), allow_override);
}

void EquationCatalog::load_file(const std::filesystem::path& path, bool allow_override) {
  load_string(read_text_file(path), path.string(), allow_override);
}

}  // namespace fdroof
