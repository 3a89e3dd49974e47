#include "cli.hpp"

#include <fmt/format.h>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "fdroof/fdroof.hpp"

namespace fdroof::cli {

namespace {

enum class Format { Text, Csv };

struct GlobalOptions {
  std::string machines_file;
  std::string equations_file;
  bool override_builtins = false;
  std::string format = "text";

  Format output_format() const { return format == "csv" ? Format::Csv : Format::Text; }
};

struct Context {
  MachineRegistry machines;
  EquationCatalog equations;
};

Context load_context(const GlobalOptions& g) {
  Context ctx;
  if (const char* dir = std::getenv("FDROOF_CONFIG_DIR"); dir && *dir) {
    const std::filesystem::path base(dir);
    if (std::filesystem::exists(base / "machines.yaml")) {
      ctx.machines.load_file(base / "machines.yaml");
    }
    if (std::filesystem::exists(base / "equations.yaml")) {
      ctx.equations.load_file(base / "equations.yaml", g.override_builtins);
    }
  }
  if (!g.machines_file.empty()) ctx.machines.load_file(g.machines_file);
  if (!g.equations_file.empty()) ctx.equations.load_file(g.equations_file, g.override_builtins);
  return ctx;
}

void emit(std::ostream& out, const TextTable& table, Format format) {
  if (format == Format::Csv) {
    table.render_csv(out);
  } else {
    table.render(out);
  }
}

void check_order(int order) {
  if (order < 2 || order > kMaxSpatialOrder || order % 2 != 0) {
    throw ValidationError(
        fmt::format("order must be an even integer in [2, {}], got {}", kMaxSpatialOrder, order));
  }
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("-");
}

template <typename Fn>
void write_file(const std::string& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  fn(out);
  if (!out) throw Error("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// machines

struct MachinesArgs {
  std::string action = "list";
  std::string name;
};

void cmd_machines(const Context& ctx, const MachinesArgs& a, Format format, std::ostream& out) {
  if (a.action == "list") {
    TextTable t({"name", "gflops_theoretical", "bw_theoretical", "gflops_achievable",
                 "bw_achievable", "ridge_point", "precision_bytes"});
    for (const auto& m : ctx.machines.machines()) {
      t.add_row({m.name, format_number(m.peak_gflops_theoretical),
                 format_number(m.peak_bw_theoretical), optional_number(m.peak_gflops_achievable),
                 optional_number(m.peak_bw_achievable),
                 m.has_achievable_rates() ? format_number(ridge_point(m)) : std::string("-"),
                 std::to_string(m.precision_bytes)});
    }
    emit(out, t, format);
    return;
  }
  if (a.name.empty()) throw ValidationError("machines show needs a machine name");
  const MachineSpec& m = ctx.machines.get(a.name);
  TextTable t({"field", "value"});
  t.add_row({"name", m.name});
  t.add_row({"peak_gflops_theoretical", format_number(m.peak_gflops_theoretical)});
  t.add_row({"peak_bw_theoretical", format_number(m.peak_bw_theoretical)});
  t.add_row({"peak_gflops_achievable", optional_number(m.peak_gflops_achievable)});
  t.add_row({"peak_bw_achievable", optional_number(m.peak_bw_achievable)});
  if (m.has_achievable_rates()) {
    t.add_row({"ridge_point", format_number(ridge_point(m))});
  } else {
    const RatePair hint = achievable_hint(m);
    t.add_row({"ridge_point", "unknown (achievable rates missing)"});
    t.add_row({"achievable_hint_gflops", format_number(hint.gflops)});
    t.add_row({"achievable_hint_bw", format_number(hint.bw)});
  }
  t.add_row({"precision_bytes", std::to_string(m.precision_bytes)});
  if (m.arch) {
    t.add_row({"arch", fmt::format("{} lanes x {} fma x {} cores x {} sockets x {} GHz",
                                   m.arch->simd_lanes_sp, m.arch->fma_ops_per_cycle,
                                   m.arch->cores, m.arch->sockets, m.arch->clock_ghz)});
  }
  if (m.mem) {
    t.add_row({"mem", fmt::format("{} MT/s x {} channels x {} bytes x {} sockets",
                                  m.mem->transfer_rate_mts, m.mem->channels,
                                  m.mem->bytes_per_channel, m.mem->sockets)});
  }
  if (!m.notes.empty()) t.add_row({"notes", m.notes});
  emit(out, t, format);
}

// ---------------------------------------------------------------------------
// oi

struct OiArgs {
  std::string equation;
  int order = 0;
  std::string machine;
  int precision = 0;
};

void cmd_oi(const Context& ctx, const OiArgs& a, Format format, std::ostream& out) {
  check_order(a.order);
  const EquationSpec& eq = ctx.equations.get(a.equation);
  const MachineSpec* machine = a.machine.empty() ? nullptr : &ctx.machines.get(a.machine);
  const int precision = a.precision != 0 ? a.precision : machine ? machine->precision_bytes : 4;
  const int k = stencil_size_for_order(a.order);
  const OIResult r = operational_intensity(eq, k, precision);

  std::vector<std::string> header = {"equation", "order", "k", "kernel_flops",
                                     "bytes_per_point", "oi"};
  std::vector<std::string> row = {eq.name,
                                  std::to_string(a.order),
                                  std::to_string(k),
                                  std::to_string(r.kernel_flops),
                                  std::to_string(r.bytes_per_point),
                                  format_number(r.oi)};
  if (machine) {
    const Attainable att = attainable_performance(*machine, r.oi);
    header.insert(header.end(), {"machine", "ridge_point", "attainable_gflops", "bound"});
    row.insert(row.end(), {machine->name, format_number(ridge_point(*machine)),
                           format_number(att.gflops), std::string(to_string(att.bound))});
  }
  if (format == Format::Csv) {
    TextTable t(header);
    t.add_row(row);
    t.render_csv(out);
    return;
  }
  TextTable t({"field", "value"});
  for (std::size_t i = 0; i < header.size(); ++i) t.add_row({header[i], row[i]});
  t.render(out);
}

// ---------------------------------------------------------------------------
// min-order

struct MinOrderArgs {
  std::string equation;
  std::string machine;
};

void cmd_min_order(const Context& ctx, const MinOrderArgs& a, Format format, std::ostream& out) {
  const EquationSpec& eq = ctx.equations.get(a.equation);
  const MachineSpec& m = ctx.machines.get(a.machine);
  const auto order = min_compute_bound_order(eq, m);
  TextTable t({"equation", "machine", "ridge_point", "min_order", "k", "oi"});
  if (order) {
    const int k = stencil_size_for_order(*order);
    t.add_row({eq.name, m.name, format_number(ridge_point(m)), std::to_string(*order),
               std::to_string(k), format_number(operational_intensity(eq, k, m.precision_bytes).oi)});
  } else {
    t.add_row({eq.name, m.name, format_number(ridge_point(m)), "never", "-", "-"});
  }
  emit(out, t, format);
}

// ---------------------------------------------------------------------------
// roofline

struct RooflineArgs {
  std::string machine;
  std::vector<std::string> points;
  std::vector<std::string> measured;
  std::string svg;
  std::string csv;
  bool reference_markers = false;
  double epsilon = 0.05;
};

// "eq:order" or "eq:lo..hi" (even orders, step 2).
std::vector<RooflineRequest> parse_points(const Context& ctx,
                                          const std::vector<std::string>& items) {
  std::vector<RooflineRequest> out;
  for (const auto& item : items) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
      throw ValidationError("point '" + item + "' must look like equation:order");
    }
    const EquationSpec& eq = ctx.equations.get(item.substr(0, colon));
    const std::string spec = item.substr(colon + 1);
    int lo = 0;
    int hi = 0;
    try {
      const auto dots = spec.find("..");
      if (dots == std::string::npos) {
        lo = hi = std::stoi(spec);
      } else {
        lo = std::stoi(spec.substr(0, dots));
        hi = std::stoi(spec.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw ValidationError("point '" + item + "' has a malformed order");
    }
    check_order(lo);
    check_order(hi);
    if (lo > hi) throw ValidationError("point '" + item + "' has an empty order range");
    for (int order = lo; order <= hi; order += 2) {
      out.push_back({eq.name + ":" + std::to_string(order), eq, stencil_size_for_order(order),
                     std::nullopt});
    }
  }
  return out;
}

void cmd_roofline(const Context& ctx, const RooflineArgs& a, Format format, std::ostream& out,
                  std::ostream& err) {
  const MachineSpec& m = ctx.machines.get(a.machine);
  auto requests = parse_points(ctx, a.points);
  for (const auto& item : a.measured) {
    const auto eq = item.rfind('=');
    if (eq == std::string::npos) {
      throw ValidationError("measurement '" + item + "' must look like label=gflops");
    }
    const std::string label = item.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError("measurement '" + item + "' has a malformed value");
    }
    auto it = std::find_if(requests.begin(), requests.end(),
                           [&](const RooflineRequest& r) { return r.label == label; });
    if (it == requests.end()) {
      throw ValidationError("measurement label '" + label + "' matches no point");
    }
    it->measured_gflops = value;
  }

  const RooflineDataset d = roofline_dataset(
      m, requests,
      a.reference_markers ? default_reference_markers() : std::vector<ReferenceMarker>{});

  TextTable t({"label", "k", "oi", "attainable_gflops", "bound", "measured_gflops",
               "fraction_of_roof"});
  for (const auto& p : d.points) {
    t.add_row({p.label, std::to_string(p.k), format_number(p.oi),
               format_number(p.attainable_gflops), std::string(to_string(p.bound)),
               optional_number(p.measured_gflops),
               p.measured_gflops ? format_number(*p.measured_gflops / p.attainable_gflops)
                                 : std::string("-")});
    if (p.exceeds_roof(a.epsilon)) {
      err << "warning: " << p.label << " measured above the roof by more than "
          << format_number(a.epsilon * 100.0) << "%: model inconsistency\n";
    }
  }
  if (format == Format::Text) {
    out << "machine " << m.name << ": ridge " << format_number(d.ridge) << " FLOPs/byte, peak "
        << format_number(d.peak_gflops) << " GFLOPS, bandwidth " << format_number(d.peak_bw)
        << " GB/s\n";
  }
  emit(out, t, format);

  if (!a.svg.empty()) {
    ChartSpec chart = roofline_chart(d);
    chart.output = a.svg;
    write_svg(chart);
  }
  if (!a.csv.empty()) {
    write_file(a.csv, [&](std::ostream& f) { write_roofline_csv(f, d); });
  }
}

// ---------------------------------------------------------------------------
// oi-curve

struct OiCurveArgs {
  std::vector<std::string> equations;
  int kmin = 3;
  int kmax = 0;
  std::vector<std::string> machines;
  std::string svg;
  int precision = 4;
};

void cmd_oi_curve(const Context& ctx, const OiCurveArgs& a, Format format, std::ostream& out) {
  std::vector<EquationSpec> eqs;
  for (const auto& name : a.equations) eqs.push_back(ctx.equations.get(name));
  std::vector<MachineSpec> machines;
  for (const auto& name : a.machines) machines.push_back(ctx.machines.get(name));
  const OICurveSet curves = oi_curve(eqs, a.kmin, a.kmax, machines, a.precision);

  std::vector<std::string> header = {"k"};
  for (const auto& s : curves.series) header.push_back(s.equation);
  TextTable t(header);
  if (!curves.series.empty()) {
    const auto& first = curves.series.front().samples;
    for (std::size_t i = 0; i < first.size(); ++i) {
      std::vector<std::string> row = {std::to_string(first[i].k)};
      for (const auto& s : curves.series) row.push_back(format_number(s.samples[i].oi));
      t.add_row(std::move(row));
    }
  }
  emit(out, t, format);
  if (format == Format::Text) {
    for (const auto& m : curves.markers) {
      out << "I_min " << m.machine << ": " << format_number(m.ridge) << '\n';
    }
  }
  if (!a.svg.empty()) {
    ChartSpec chart = oi_curve_chart(curves);
    chart.output = a.svg;
    write_svg(chart);
  }
}

// ---------------------------------------------------------------------------
// cost

struct CostArgs {
  std::vector<int> orders;
  std::vector<std::string> machines = {"xeon-e5-2697v2-2s", "phi-7120a"};
  std::string scenario;
  std::string csv;
  std::string equation;
};

void cmd_cost(const Context& ctx, const CostArgs& a, Format format, std::ostream& out,
              std::ostream& err) {
  if (a.orders.empty()) throw ValidationError("cost needs at least one order");
  for (int order : a.orders) check_order(order);
  CostScenario sc;
  if (!a.scenario.empty()) sc = parse_cost_scenario(read_text_file(a.scenario), a.scenario);
  const EquationSpec& eq = ctx.equations.get(a.equation.empty() ? sc.equation : a.equation);
  std::vector<MachineSpec> machines;
  for (const auto& name : a.machines) machines.push_back(ctx.machines.get(name));

  const CostTable table = scenario_table(sc, a.orders, machines, eq);
  if (table.outside_validated_scope) {
    err << "warning: the stability/dispersion cost model is validated for the acoustic "
           "equation only; '"
        << eq.name << "' results are extrapolated\n";
  }

  std::vector<std::string> header = {"order", "a2", "p", "h", "dt", "N", "nt", "oi",
                                     "total_gflops"};
  for (const auto& m : table.machines) {
    header.push_back(m + "_gflops");
    header.push_back(m + "_capped_gflops");
    header.push_back(m + "_runtime_s");
  }
  TextTable t(header);
  for (const auto& r : table.rows) {
    std::vector<std::string> row = {std::to_string(r.order), format_number(r.a2),
                                    format_number(r.p),      format_number(r.h),
                                    format_number(r.dt),     format_number(r.n_grid),
                                    std::to_string(r.n_t),   format_number(r.oi),
                                    format_number(r.total_gflops)};
    for (const auto& mc : r.machines) {
      row.push_back(format_number(mc.predicted_gflops));
      row.push_back(format_number(mc.capped_gflops));
      row.push_back(std::to_string(mc.runtime_s));
    }
    t.add_row(std::move(row));
  }
  if (format == Format::Text) {
    out << "final time T = " << format_number(table.final_time) << '\n';
  }
  emit(out, t, format);
  if (!a.csv.empty()) {
    write_file(a.csv, [&](std::ostream& f) { write_cost_csv(f, table); });
  }
}

// ---------------------------------------------------------------------------
// utilization

struct UtilizationArgs {
  std::string equation;
  double grid = 0.0;
  double nt = 0.0;
  double runtime = -1.0;
  std::string machine;
  int order = 8;
};

void cmd_utilization(const Context& ctx, const UtilizationArgs& a, Format format,
                     std::ostream& out) {
  check_order(a.order);
  const EquationSpec& eq = ctx.equations.get(a.equation);
  const MachineSpec& m = ctx.machines.get(a.machine);
  const int k = stencil_size_for_order(a.order);
  const double n = a.grid * a.grid * a.grid;
  const double achieved = achieved_gflops(eq, k, n, a.nt, a.runtime);
  const OIResult oi = operational_intensity(eq, k, m.precision_bytes);
  const UtilizationReport r = utilization(achieved, m, oi.oi);

  TextTable t({"field", "value"});
  t.add_row({"equation", eq.name});
  t.add_row({"machine", m.name});
  t.add_row({"kernel_flops", std::to_string(oi.kernel_flops)});
  t.add_row({"oi", format_number(oi.oi)});
  t.add_row({"achieved_gflops", format_number(r.achieved_gflops)});
  t.add_row({"attainable_gflops", format_number(r.attainable_gflops)});
  t.add_row({"utilization_percent", format_number(r.utilization * 100.0)});
  t.add_row({"headroom_factor", format_number(r.headroom_factor)});
  emit(out, t, format);
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  int order = 8;
  int grid = 64;
  int nt = 50;
  std::string machine;
  std::string svg;
  std::string dump;
  int repeat = 1;
  int threads = 1;
};

void cmd_bench(const Context& ctx, const BenchArgs& a, Format format, std::ostream& out,
               std::ostream& err) {
  check_order(a.order);
  if (a.repeat < 1) throw ValidationError("repeat must be >= 1");
  if (a.nt < 1) throw ValidationError("nt must be >= 1");
  const MachineSpec& m = ctx.machines.get(a.machine);

  KernelConfig cfg;
  cfg.order = a.order;
  cfg.dims = {a.grid, a.grid, a.grid};
  cfg.n_t = a.nt;
  cfg.h = 1.0;
  cfg.threads = a.threads;
  cfg.dt = 0.9 * kernel_cfl_limit(cfg);
  cfg.source = PointSource{a.grid / 2, a.grid / 2, a.grid / 2,
                           ricker_wavelet(a.nt, cfg.dt, 0.05 / cfg.dt)};
  cfg.validate();
  if (auto w = cfl_warning(cfg)) err << "warning: " << *w << '\n';

  std::vector<double> gflops;
  BenchmarkResult last;
  std::optional<Wavefield> final_field;
  for (int i = 0; i < a.repeat; ++i) {
    Wavefield field = make_wavefield(cfg);
    last = run_benchmark(field, cfg, m);
    gflops.push_back(last.measured_gflops);
    final_field = std::move(field);
  }
  std::vector<double> sorted = gflops;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted.size() % 2 == 1
                            ? sorted[sorted.size() / 2]
                            : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);

  const double attainable = last.point.attainable_gflops;
  TextTable t({"field", "value"});
  t.add_row({"order", std::to_string(a.order)});
  t.add_row({"grid", fmt::format("{}^3", a.grid)});
  t.add_row({"nt", std::to_string(a.nt)});
  t.add_row({"repetitions", std::to_string(a.repeat)});
  t.add_row({"oi", format_number(last.oi)});
  t.add_row({"machine", m.name});
  t.add_row({"attainable_gflops", format_number(attainable)});
  t.add_row({"measured_gflops_min", format_number(sorted.front())});
  t.add_row({"measured_gflops_median", format_number(median)});
  t.add_row({"measured_gflops_max", format_number(sorted.back())});
  t.add_row({"percent_of_attainable", format_number(median / attainable * 100.0)});
  emit(out, t, format);

  if (!a.svg.empty()) {
    RooflineRequest req{fmt::format("acoustic:{}", a.order), ctx.equations.get("acoustic"),
                        stencil_size_for_order(a.order), median};
    ChartSpec chart = roofline_chart(roofline_dataset(m, {req}));
    chart.output = a.svg;
    write_svg(chart);
  }
  if (!a.dump.empty() && final_field) dump_wavefield(*final_field, a.dump);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fdroof: roofline performance prediction for finite-difference wave solvers",
               "fdroof"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--machines-file", g.machines_file, "Machine registry file (YAML documents)");
  app.add_option("--equations-file", g.equations_file, "Equation definition file");
  app.add_flag("--override-builtins", g.override_builtins,
               "Allow equation files to replace built-in equations");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));

  MachinesArgs machines_args;
  auto* machines = app.add_subcommand("machines", "List or show machine descriptions");
  machines->add_option("action", machines_args.action, "list | show")
      ->check(CLI::IsMember({"list", "show"}));
  machines->add_option("name", machines_args.name, "Machine name for `show`");

  OiArgs oi_args;
  auto* oi = app.add_subcommand("oi", "Operational intensity of an equation at a given order");
  oi->add_option("--equation", oi_args.equation)->required();
  oi->add_option("--order", oi_args.order, "Even spatial order (k = order + 1)")->required();
  oi->add_option("--machine", oi_args.machine);
  oi->add_option("--precision", oi_args.precision, "Bytes per value (4 or 8)")
      ->check(CLI::IsMember({4, 8}));

  MinOrderArgs min_args;
  auto* min_order =
      app.add_subcommand("min-order", "Smallest even order that is compute-bound on a machine");
  min_order->add_option("--equation", min_args.equation)->required();
  min_order->add_option("--machine", min_args.machine)->required();

  RooflineArgs roof_args;
  auto* roofline = app.add_subcommand("roofline", "Roofline dataset and chart for a machine");
  roofline->add_option("--machine", roof_args.machine)->required();
  roofline->add_option("--points", roof_args.points, "eq:order or eq:lo..hi, comma separated")
      ->delimiter(',');
  roofline->add_option("--measured", roof_args.measured, "label=gflops (label is eq:order)")
      ->delimiter(',');
  roofline->add_option("--svg", roof_args.svg);
  roofline->add_option("--csv", roof_args.csv);
  roofline->add_flag("--reference-markers", roof_args.reference_markers,
                     "Draw SpMV / stencil / 3D FFT reference intensities");
  roofline->add_option("--epsilon", roof_args.epsilon,
                       "Relative tolerance before a measurement above the roof is flagged");

  OiCurveArgs curve_args;
  auto* oi_curve_cmd = app.add_subcommand("oi-curve", "OI as a function of stencil size");
  oi_curve_cmd->add_option("--equations", curve_args.equations)->delimiter(',')->required();
  oi_curve_cmd->add_option("--kmin", curve_args.kmin);
  oi_curve_cmd->add_option("--kmax", curve_args.kmax)->required();
  oi_curve_cmd->add_option("--machines", curve_args.machines)->delimiter(',');
  oi_curve_cmd->add_option("--svg", curve_args.svg);
  oi_curve_cmd->add_option("--precision", curve_args.precision)->check(CLI::IsMember({4, 8}));

  CostArgs cost_args;
  auto* cost = app.add_subcommand("cost", "Cost-to-solution table across spatial orders");
  cost->add_option("--orders", cost_args.orders, "Even orders, comma separated")
      ->delimiter(',')
      ->required();
  cost->add_option("--machines", cost_args.machines)->delimiter(',');
  cost->add_option("--scenario", cost_args.scenario, "Scenario file (YAML)");
  cost->add_option("--csv", cost_args.csv);
  cost->add_option("--equation", cost_args.equation);

  UtilizationArgs util_args;
  auto* util = app.add_subcommand("utilization", "Achieved GFLOPS and hardware utilization");
  util->add_option("--equation", util_args.equation)->required();
  util->add_option("--grid", util_args.grid, "Grid points per dimension")->required();
  util->add_option("--nt", util_args.nt, "Time steps")->required();
  util->add_option("--runtime", util_args.runtime, "Wall time in seconds")->required();
  util->add_option("--machine", util_args.machine)->required();
  util->add_option("--order", util_args.order);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run the reference acoustic kernel");
  bench->add_option("--order", bench_args.order);
  bench->add_option("--grid", bench_args.grid, "Points per dimension (cube)");
  bench->add_option("--nt", bench_args.nt);
  bench->add_option("--machine", bench_args.machine)->required();
  bench->add_option("--svg", bench_args.svg);
  bench->add_option("--dump", bench_args.dump, "Write the final wavefield as raw float32");
  bench->add_option("--repeat", bench_args.repeat);
  bench->add_option("--threads", bench_args.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Context ctx = load_context(g);
    const Format format = g.output_format();
    if (*machines) {
      cmd_machines(ctx, machines_args, format, out);
    } else if (*oi) {
      cmd_oi(ctx, oi_args, format, out);
    } else if (*min_order) {
      cmd_min_order(ctx, min_args, format, out);
    } else if (*roofline) {
      cmd_roofline(ctx, roof_args, format, out, err);
    } else if (*oi_curve_cmd) {
      cmd_oi_curve(ctx, curve_args, format, out);
    } else if (*cost) {
      cmd_cost(ctx, cost_args, format, out, err);
    } else if (*util) {
      cmd_utilization(ctx, util_args, format, out);
    } else if (*bench) {
      cmd_bench(ctx, bench_args, format, out, err);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace fdroof::cli
