#include "gabor/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gabor/cli/document.hpp"
#include "gabor/cyclotomic.hpp"
#include "gabor/error.hpp"
#include "gabor/reconstruct.hpp"
#include "gabor/structure.hpp"

namespace gabor::cli {

using nlohmann::json;

ToleranceConfig CommonOptions::tolerance() const {
  ToleranceConfig cfg;
  cfg.zero_tol = zero_tol;
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

// Writes to --output when given, to `out` otherwise.
void emit(const CommonOptions& common, std::ostream& out, const std::string& text) {
  if (common.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.output);
  if (!file) throw GaborError(ErrorCode::Parse, "cannot write '" + common.output + "'");
  file << text;
}

SystemDocument load_document(const CommonOptions& common) {
  if (common.input.empty()) throw GaborError(ErrorCode::InvalidArgument, "--input is required");
  return read_document(common.input);
}

json subgroup_json(const SubgroupInfo& s) {
  json j{{"is_subgroup", s.is_subgroup}};
  if (s.is_subgroup) {
    j["order"] = s.order;
    j["generator"] = s.generator;
  }
  return j;
}

std::string route_label(const BlockDiagonalization& bd) {
  if (bd.transform.kind == TransformKind::Identity) {
    const auto sizes = bd.block_sizes();
    const bool all_scalar = std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 1; });
    return all_scalar && sizes.size() > 1 ? "identity/diagonal" : "dense";
  }
  return std::string(bd.transform.name());
}

ResidueSet zero_diagonals(const DiagonalSupport& support) {
  ResidueSet out;
  for (std::size_t d = 0; d < support.n; ++d)
    if (!support.contains(d)) out.push_back(d);
  return out;
}

ComplexVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexVector v(n);
  for (auto& z : v) z = {dist(rng), dist(rng)};
  const double s = norm(v);
  for (auto& z : v) z /= s;
  return v;
}

std::string csv_key_values(const json& report, const std::string& prefix = "") {
  std::string out;
  for (const auto& [key, value] : report.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      out += csv_key_values(value, name);
    } else {
      std::string cell = value.is_string() ? value.get<std::string>() : value.dump();
      if (cell.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        cell = quoted + "\"";
      }
      out += name + "," + cell + "\n";
    }
  }
  return out;
}

std::string render(const CommonOptions& common, const json& report) {
  if (common.format == "csv") return "key,value\n" + csv_key_values(report);
  return report.dump(2) + "\n";
}

// Divisor of n in (1, n) closest to √n, smaller one on ties.
std::optional<std::size_t> balanced_divisor(std::size_t n) {
  std::optional<std::size_t> best;
  const double root = std::sqrt(static_cast<double>(n));
  for (auto d : divisors(n)) {
    if (d == 1 || d == n) continue;
    if (!best || std::abs(static_cast<double>(d) - root) < std::abs(static_cast<double>(*best) - root)) best = d;
  }
  return best;
}

template <typename F>
double seconds_per_call(std::size_t reps, F&& f) {
  reps = std::max<std::size_t>(reps, 1);
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(Clock::now() - t0).count() / static_cast<double>(reps);
}

}  // namespace

int cmd_analyze(const CommonOptions& common, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  const auto doc = load_document(common);
  const auto sys = to_system(doc);
  const auto cfg = common.tolerance();
  const std::size_t n = sys.dimension();

  const auto s = frame_operator_factored(sys);
  const auto verdict = frame_bounds(s, cfg);
  const auto precheck = support_frame_precheck(sys, cfg);
  const auto bd = block_equivalence_route(sys, s, cfg, common.route);
  const double reassembly = max_abs_difference(conjugate_transform(bd.transform, s), assemble_block_diagonal(bd.blocks));

  const auto dset = divisor_set(n, sys.modulations());
  const auto predicted = predicted_zero_diagonals(n, sys.modulations());
  const auto measured = zero_diagonals(diagonal_support(s, cfg));
  const bool covers = std::includes(measured.begin(), measured.end(), predicted.begin(), predicted.end());
  const bool precheck_consistent = precheck.verdict == PrecheckVerdict::Inconclusive || !verdict.is_frame;

  json report{
      {"N", n},
      {"L", sys.modulations()},
      {"K", sys.translations()},
      {"L_subgroup", subgroup_json(detect_subgroup(sys.modulations(), n))},
      {"K_subgroup", subgroup_json(detect_subgroup(sys.translations(), n))},
      {"route", route_label(bd)},
      {"ell", bd.ell},
      {"block_sizes", bd.block_sizes()},
      {"reassembly_error", reassembly},
      {"frame",
       {{"is_frame", verdict.is_frame},
        {"lower_bound", verdict.lower_bound},
        {"upper_bound", verdict.upper_bound},
        {"condition_number", verdict.is_frame ? json(verdict.condition_number()) : json(nullptr)}}},
      {"precheck",
       {{"verdict", precheck.verdict == PrecheckVerdict::CannotBeFrame ? "cannot_be_frame" : "inconclusive"},
        {"window_support", precheck.window_support},
        {"spectrum_support", precheck.spectrum_support},
        {"reason", precheck.reason}}},
      {"divisor_set", dset},
      {"predicted_zero_diagonals", predicted},
      {"measured_zero_diagonals", measured},
      {"agreement", {{"measured_contains_predicted", covers}, {"precheck_consistent", precheck_consistent}}},
  };
  emit(common, out, render(common, report));
  if (!opts.matrix_out.empty()) {
    std::ofstream file(opts.matrix_out);
    if (!file) throw GaborError(ErrorCode::Parse, "cannot write '" + opts.matrix_out + "'");
    file << matrix_to_csv(s);
  }
  if (!verdict.is_frame) {
    err << "not a frame: lower frame bound " << verdict.lower_bound;
    if (!precheck.reason.empty()) err << " (" << precheck.reason << ")";
    err << "\n";
    return kExitNotAFrame;
  }
  return kExitFrame;
}

int cmd_window(const CommonOptions& common, const WindowOptions& opts, std::ostream& out, std::ostream&) {
  const std::size_t n = opts.n, p = opts.p, r = opts.r.value_or(opts.n);
  if (n == 0 || p <= 1 || n % p != 0) throw GaborError(ErrorCode::InvalidArgument, "--p must divide --N and exceed 1");
  if (r == 0 || n % r != 0) throw GaborError(ErrorCode::InvalidArgument, "--r must divide --N");
  const std::size_t m = n / p;
  InterlaceSpec spec{n, p, default_orthogonal_family(m, p, opts.family)};
  const auto g = interlace_window(spec, common.tolerance());

  SystemDocument doc;
  doc.n = n;
  doc.g = g;
  for (auto v : cyclic_subgroup(n, r)) doc.modulations.push_back(static_cast<std::int64_t>(v));
  for (auto v : cyclic_subgroup(n, p)) doc.translations.push_back(static_cast<std::int64_t>(v));
  json j = to_json(doc);
  j["note"] = {{"p", p},
               {"r", r},
               {"family", std::string(to_string(opts.family))},
               {"gcd_p_N_over_r", std::gcd(p, n / r)},
               {"diagonality_predicted", interlace_is_diagonal(n, p, r)}};
  emit(common, out, j.dump(2) + "\n");
  return kExitFrame;
}

int cmd_reconstruct(const CommonOptions& common, const ReconstructOptions& opts, std::ostream& out, std::ostream& err) {
  const auto sys = to_system(load_document(common));
  const auto cfg = common.tolerance();
  const std::size_t n = sys.dimension();

  std::vector<ComplexVector> signals;
  if (!opts.signals.empty()) {
    std::ifstream in(opts.signals);
    if (!in) throw GaborError(ErrorCode::Parse, "cannot open '" + opts.signals + "'");
    signals = parse_signals(in, n);
  } else {
    std::mt19937_64 rng(common.seed);
    for (std::size_t i = 0; i < opts.count; ++i) signals.push_back(random_vector(n, rng));
  }

  const auto plan = ReconstructionPlan::build(sys, cfg, common.route, common.threads);
  double max_abs = 0.0, max_rel = 0.0, max_oracle = 0.0;
  std::string lines;
  for (const auto& x : signals) {
    const auto xr = plan.reconstruct(x);
    const double nx = std::max(norm(x), 1e-300);
    ComplexVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = xr[i] - x[i];
    max_abs = std::max(max_abs, max_abs_difference(xr, x));
    max_rel = std::max(max_rel, norm(diff) / nx);
    if (!opts.skip_oracle) {
      const auto xo = reconstruct_dense_oracle(sys, x, cfg);
      for (std::size_t i = 0; i < n; ++i) diff[i] = xr[i] - xo[i];
      max_oracle = std::max(max_oracle, norm(diff) / nx);
    }
    lines += emit_signal(xr) + "\n";
  }
  if (!common.output.empty()) {
    std::ofstream file(common.output);
    if (!file) throw GaborError(ErrorCode::Parse, "cannot write '" + common.output + "'");
    file << lines;
  }
  json report{{"N", n},
              {"signals", signals.size()},
              {"route", route_label(plan.blockdiag())},
              {"ell", plan.blockdiag().ell},
              {"max_abs_residual", max_abs},
              {"max_relative_residual", max_rel},
              {"max_relative_oracle_difference", opts.skip_oracle ? json(nullptr) : json(max_oracle)},
              {"threshold", opts.threshold}};
  const bool ok = max_rel <= opts.threshold;
  report["passed"] = ok;
  out << (common.format == "csv" ? "key,value\n" + csv_key_values(report) : report.dump(2) + "\n");
  if (!ok) {
    err << "relative residual " << max_rel << " exceeds threshold " << opts.threshold << "\n";
    return kExitResidual;
  }
  return kExitFrame;
}

int cmd_bench(const CommonOptions& common, const BenchOptions& opts, std::ostream& out, std::ostream&) {
  const auto cfg = common.tolerance();
  json rows = json::array();
  for (auto n : opts.sizes) {
    for (auto route : opts.routes) {
      json row{{"N", n}, {"route", std::string(to_string(route))}, {"ell", nullptr}, {"max_block", nullptr},
               {"plan_build_s", nullptr}, {"per_signal_s", nullptr}, {"dense_solve_s", nullptr},
               {"speedup", nullptr}, {"residual", nullptr}, {"reason", ""}};
      const auto div = balanced_divisor(n);
      if (!div || route == Route::Auto) {
        row["reason"] = route == Route::Auto ? "auto route is not benchmarked" : "N has no divisor strictly between 1 and N";
        rows.push_back(row);
        continue;
      }
      // Seed depends only on (seed, N) so every route sees the same window.
      std::mt19937_64 rng(common.seed ^ (0x9E3779B97F4A7C15ULL * n));
      const auto g = random_vector(n, rng);
      const auto x = random_vector(n, rng);
      ResidueSet l, k;
      if (route == Route::BlockFourier) {
        k = cyclic_subgroup(n, *div);
        for (std::size_t i = 0; i < n / *div; ++i) l.push_back(i);
      } else {
        l = cyclic_subgroup(n, *div);
        k = cyclic_subgroup(n, n / *div);
      }
      const GaborSystem sys(g, l, k);
      try {
        auto build = [&] { return ReconstructionPlan::build(sys, cfg, route, common.threads); };
        const auto t0 = Clock::now();
        const auto plan = build();
        const double build_s = std::chrono::duration<double>(Clock::now() - t0).count();
        ComplexVector xr;
        const double per_signal = seconds_per_call(opts.repetitions, [&] { xr = plan.reconstruct(x); });
        const auto s = frame_operator_factored(sys);
        const auto analysis = s.apply(x);
        const double dense = seconds_per_call(opts.repetitions, [&] { (void)solve_hermitian(s, analysis, cfg); });
        ComplexVector diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = xr[i] - x[i];
        const auto sizes = plan.blockdiag().block_sizes();
        row["ell"] = plan.blockdiag().ell;
        row["max_block"] = *std::max_element(sizes.begin(), sizes.end());
        row["plan_build_s"] = build_s;
        row["per_signal_s"] = per_signal;
        row["dense_solve_s"] = dense;
        row["speedup"] = dense / std::max(per_signal, 1e-12);
        row["residual"] = norm(diff) / norm(x);
      } catch (const GaborError& e) {
        row["reason"] = e.what();
      }
      rows.push_back(row);
    }
  }

  if (common.format == "json") {
    emit(common, out, rows.dump(2) + "\n");
    return kExitFrame;
  }
  static const char* cols[] = {"N", "route", "ell", "max_block", "plan_build_s", "per_signal_s",
                               "dense_solve_s", "speedup", "residual", "reason"};
  std::string csv;
  for (std::size_t c = 0; c < std::size(cols); ++c) csv += std::string(c ? "," : "") + cols[c];
  csv += "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < std::size(cols); ++c) {
      const auto& v = row[cols[c]];
      std::string cell = v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
      if (cell.find(',') != std::string::npos) cell = "\"" + cell + "\"";
      csv += std::string(c ? "," : "") + cell;
    }
    csv += "\n";
  }
  emit(common, out, csv);
  return kExitFrame;
}

int cmd_blocks(const CommonOptions& common, std::ostream& out, std::ostream&) {
  const auto sys = to_system(load_document(common));
  const auto cfg = common.tolerance();
  const auto bd = block_equivalence_route(sys, cfg, common.route);
  if (common.format == "csv") {
    std::string csv = "block,row,entries\n";
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
      const auto& blk = bd.blocks[b];
      for (std::size_t i = 0; i < blk.rows(); ++i) {
        csv += std::to_string(b) + "," + std::to_string(i);
        for (std::size_t j = 0; j < blk.cols(); ++j) csv += "," + format_complex_cell(blk(i, j));
        csv += "\n";
      }
    }
    emit(common, out, csv);
    return kExitFrame;
  }
  json transform{{"kind", std::string(bd.transform.name())}};
  if (bd.transform.kind == TransformKind::Permutation) transform["permutation"] = bd.transform.permutation;
  if (bd.transform.kind == TransformKind::BlockFourier) {
    transform["m"] = bd.transform.m;
    transform["k"] = bd.transform.k;
  }
  json blocks = json::array();
  for (const auto& b : bd.blocks) blocks.push_back(matrix_to_json(b));
  json j{{"N", sys.dimension()}, {"route", route_label(bd)}, {"ell", bd.ell}, {"transform", transform}, {"blocks", blocks}};
  emit(common, out, j.dump(2) + "\n");
  return kExitFrame;
}

int cmd_zeros(const CommonOptions& common, const SetOptions& opts, std::ostream& out, std::ostream&) {
  std::size_t n = opts.n;
  ResidueSet l;
  if (!common.input.empty()) {
    const auto doc = load_document(common);
    n = doc.n;
    l = canonical_residues(doc.modulations, n);
  } else {
    if (n == 0 || opts.set.empty()) throw GaborError(ErrorCode::InvalidArgument, "give --input or both --N and --set");
    l = canonical_residues(opts.set, n);
  }
  const auto dset = divisor_set(n, l);
  json cyclo = json::object();
  for (auto d : dset) cyclo[std::to_string(d)] = cyclotomic(d).to_string();
  const auto predicted = predicted_zero_diagonals(n, l);
  const auto measured = zero_diagonals(diagonal_support(modulation_matrix(n, l), common.tolerance()));
  json j{{"N", n},
         {"L", l},
         {"characteristic_polynomial", characteristic_poly(l).to_string()},
         {"divisor_set", dset},
         {"cyclotomic_factors", cyclo},
         {"predicted_zero_diagonals", predicted},
         {"modulation_matrix_zero_diagonals", measured},
         {"predictions_hold", std::includes(measured.begin(), measured.end(), predicted.begin(), predicted.end())}};
  emit(common, out, render(common, j));
  return kExitFrame;
}

int cmd_tile(const CommonOptions& common, const SetOptions& opts, std::ostream& out, std::ostream&) {
  if (opts.n == 0 || opts.set.empty()) throw GaborError(ErrorCode::InvalidArgument, "--N and --set are required");
  const auto a = canonical_residues(opts.set, opts.n);
  const auto complement = find_tiling_complement(a, opts.n);
  json j{{"N", opts.n},
         {"set", a},
         {"complement", complement ? json(*complement) : json(nullptr)},
         {"divisor_set", divisor_set(opts.n, a)}};
  emit(common, out, render(common, j));
  return kExitFrame;
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw GaborError(ErrorCode::InvalidArgument, "not an integer list: '" + text + "'");
    }
  }
  return out;
}

std::size_t threads_from_env() {
  const char* v = std::getenv("GABOR_BLOCKS_THREADS");
  if (!v || !*v) return 1;
  try {
    return static_cast<std::size_t>(std::stoul(v));
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-diagonalization and reconstruction tools for finite Gabor frames"};
  app.require_subcommand(1);

  CommonOptions common;
  common.threads = threads_from_env();
  std::string route = "auto";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", common.input, "System document (JSON)");
    sub->add_option("--output", common.output, "Output path (stdout when omitted)");
    sub->add_option("--seed", common.seed, "Seed for every random draw");
    sub->add_option("--zero-tol", common.zero_tol, "Absolute threshold for numerically zero")->check(CLI::NonNegativeNumber);
    sub->add_option("--route", route, "Block route")->check(CLI::IsMember({"auto", "permutation", "block-fourier", "dense"}));
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Structure, frame bounds and zero diagonals of a system");
  add_common(a);
  a->add_option("--matrix-out", analyze.matrix_out, "Write the frame operator as CSV");

  WindowOptions window;
  std::string family = "fourier";
  std::size_t r = 0;
  auto* w = app.add_subcommand("window", "Emit an interlaced-window system document");
  add_common(w);
  w->add_option("--N", window.n, "Dimension")->required();
  w->add_option("--p", window.p, "Order of the translation subgroup")->required();
  w->add_option("--r", r, "Order of the modulation subgroup (default N)");
  w->add_option("--family", family, "Orthogonal family")->check(CLI::IsMember({"basis", "fourier"}));

  ReconstructOptions recon;
  auto* rc = app.add_subcommand("reconstruct", "Reconstruct signals through the blockwise plan");
  add_common(rc);
  rc->add_option("--signals", recon.signals, "Signals, one JSON array per line");
  rc->add_option("--count", recon.count, "Random signals to draw when --signals is absent");
  rc->add_option("--threshold", recon.threshold, "Relative residual threshold (exit 3 above it)");
  rc->add_flag("--skip-oracle", recon.skip_oracle, "Do not compare against the dense solve");

  BenchOptions bench;
  std::string sizes = "64,256,1024", routes = "permutation,block-fourier,dense";
  auto* b = app.add_subcommand("bench", "Time blockwise against dense reconstruction");
  add_common(b);
  b->add_option("--sizes", sizes, "Comma-separated N values");
  b->add_option("--routes", routes, "Comma-separated routes");
  b->add_option("--reps", bench.repetitions, "Timing repetitions");

  auto* bl = app.add_subcommand("blocks", "Dump the blocks of the chosen route");
  add_common(bl);

  SetOptions set_opts;
  std::string set_text;
  auto* z = app.add_subcommand("zeros", "Cyclotomic zero-diagonal predictions for a modulation set");
  add_common(z);
  z->add_option("--N", set_opts.n, "Dimension (when --input is absent)");
  z->add_option("--set", set_text, "Comma-separated modulation set");

  auto* t = app.add_subcommand("tile", "Search a tiling complement of a set in Z_N");
  add_common(t);
  t->add_option("--N", set_opts.n, "Dimension")->required();
  t->add_option("--set", set_text, "Comma-separated set")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    common.route = parse_route(route);
    if (a->parsed()) return cmd_analyze(common, analyze, out, err);
    if (w->parsed()) {
      window.family = parse_family_style(family);
      if (w->count("--r")) window.r = r;
      return cmd_window(common, window, out, err);
    }
    if (rc->parsed()) return cmd_reconstruct(common, recon, out, err);
    if (b->parsed()) {
      if (!b->count("--format")) common.format = "csv";
      bench.sizes.clear();
      for (auto v : parse_int_list(sizes)) {
        if (v < 1) throw GaborError(ErrorCode::InvalidArgument, "sizes must be positive");
        bench.sizes.push_back(static_cast<std::size_t>(v));
      }
      bench.routes.clear();
      std::stringstream ss(routes);
      std::string item;
      while (std::getline(ss, item, ',')) bench.routes.push_back(parse_route(item));
      return cmd_bench(common, bench, out, err);
    }
    if (bl->parsed()) return cmd_blocks(common, out, err);
    set_opts.set = parse_int_list(set_text);
    if (z->parsed()) return cmd_zeros(common, set_opts, out, err);
    if (t->parsed()) return cmd_tile(common, set_opts, out, err);
  } catch (const NotAFrameError& e) {
    err << e.what() << "\n";
    return kExitNotAFrame;
  } catch (const GaborError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gabor::cli
