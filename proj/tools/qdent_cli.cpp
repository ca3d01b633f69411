// Command-line front end: plot-ready CSV/JSON datasets for the
// equivalent-neighbor entanglement dynamics, plus the oracle cross-check.
#include <qdent/qdent.h>

#include <cmath>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "output.hpp"

using nlohmann::json;
using namespace qdent::cli;

namespace {

// Turns a failing C API status into a usage error (domain problems) or an
// internal failure.
void check(qdent_status status) {
  if (status == QDENT_OK) return;
  const std::string message = std::string(qdent_status_string(status)) + ": " + qdent_last_error();
  if (status == QDENT_ERR_DOMAIN || status == QDENT_ERR_BUDGET || status == QDENT_ERR_NO_SOLUTION) {
    throw UsageError{message};
  }
  throw std::runtime_error(message);
}

struct TableDeleter {
  void operator()(qdent_table* t) const { qdent_table_destroy(t); }
};
using TablePtr = std::unique_ptr<qdent_table, TableDeleter>;

TablePtr make_table(int dots, int excited) {
  qdent_table* raw = nullptr;
  check(qdent_table_create(dots, excited, &raw));
  return TablePtr(raw);
}

qdent_search_options search_options(int grid, double tol) {
  if (grid < 3) throw UsageError{"--grid must be >= 3"};
  if (!(tol > 0.0)) throw UsageError{"--tol must be positive"};
  return {grid, tol};
}

std::string record_row(const qdent_max_record& r) {
  return std::to_string(r.dots) + ',' + std::to_string(r.excited) + ',' + format_number(r.kt_star) + ',' +
         format_number(r.max_entropy) + ',' + format_number(r.relative_max) + ',' + format_number(r.mes_entropy) +
         '\n';
}

// ---- trace ----------------------------------------------------------------

struct TraceArgs {
  int dots = 0;
  int excited = 0;
  std::optional<double> kt_max;
  std::optional<double> periods;
  int steps = 0;
  std::string out = "-";
};

void run_trace(const TraceArgs& a) {
  if (a.steps < 2) throw UsageError{"--steps must be >= 2"};
  if (a.kt_max.has_value() == a.periods.has_value()) throw UsageError{"give exactly one of --kt-max or --periods"};
  const auto table = make_table(a.dots, a.excited);
  double kt_max = 0.0;
  if (a.periods) {
    double p = 0.0;
    check(qdent_period(a.dots, a.excited, &p));
    kt_max = *a.periods * p;
  } else {
    kt_max = *a.kt_max;
  }
  if (!std::isfinite(kt_max) || kt_max <= 0.0) throw UsageError{"kt range must be positive and finite"};

  int size = 0;
  check(qdent_table_size(table.get(), &size));
  std::vector<std::string> columns{"kt", "E"};
  for (int m = 0; m < size; ++m) columns.push_back("P_" + std::to_string(m));

  json params{{"dots", a.dots}, {"excited", a.excited}, {"kt_max", kt_max}, {"steps", a.steps}};
  if (a.periods) params["periods"] = *a.periods;
  std::string out = csv_preamble(manifest("trace", params), columns);

  std::vector<double> weights(static_cast<std::size_t>(size));
  for (int i = 0; i <= a.steps; ++i) {
    const double kt = kt_max * static_cast<double>(i) / static_cast<double>(a.steps);
    check(qdent_table_spectrum(table.get(), kt, weights.data(), weights.size()));
    double e = 0.0;
    check(qdent_entanglement(weights.data(), weights.size(), &e));
    out += format_number(kt) + ',' + format_number(e);
    for (double p : weights) out += ',' + format_number(p);
    out += '\n';
  }
  write_output(a.out, out);
}

// ---- maxent ---------------------------------------------------------------

struct MaxentArgs {
  int dots = 0;
  int excited = 0;
  int grid = 4096;
  double tol = 1e-12;
};

void run_maxent(const MaxentArgs& a) {
  const auto options = search_options(a.grid, a.tol);
  qdent_max_record rec{};
  const auto table = make_table(a.dots, a.excited);
  int size = 0;
  check(qdent_table_size(table.get(), &size));
  std::vector<double> spectrum(static_cast<std::size_t>(size));
  check(qdent_find_max(a.dots, a.excited, &options, &rec, spectrum.data(), spectrum.size()));

  const json params{{"dots", a.dots}, {"excited", a.excited}, {"grid", a.grid}, {"tol", a.tol}};
  const json record{{"config", {{"dots", rec.dots}, {"excitations", rec.excited}}},
                    {"kt_star", rec.kt_star},
                    {"E_max", rec.max_entropy},
                    {"e_max", rec.relative_max},
                    {"E_MES", rec.mes_entropy},
                    {"spectrum_at_max", {{"time", rec.kt_star}, {"weights", spectrum}}},
                    {"manifest", manifest("maxent", params)}};
  write_output("-", record.dump() + "\n");
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  bool over_m = false;
  bool over_n = false;
  std::string dots;
  std::string excited;
  int grid = 4096;
  double tol = 1e-12;
  std::string out = "-";
};

void run_sweep(const SweepArgs& a) {
  if (a.over_m == a.over_n) throw UsageError{"give exactly one of --over-M or --over-N"};
  const auto options = search_options(a.grid, a.tol);
  const auto dots = parse_int_range(a.dots);
  std::vector<qdent_max_record> records;
  json params{{"dots", a.dots}, {"grid", a.grid}, {"tol", a.tol}};

  if (a.over_m) {
    if (dots.size() != 1) throw UsageError{"--over-M takes a single --dots value"};
    if (!a.excited.empty()) throw UsageError{"--excited is not used with --over-M"};
    params["mode"] = "over-M";
    records.resize(static_cast<std::size_t>(std::max(dots[0] - 1, 0)));
    std::size_t written = 0;
    check(qdent_sweep_over_m(dots[0], &options, records.data(), records.size(), &written));
  } else {
    if (a.excited.empty()) throw UsageError{"--over-N requires --excited (integer or 'half')"};
    int excited = QDENT_EXCITED_HALF;
    if (a.excited != "half") {
      const auto parsed = parse_int_range(a.excited);
      if (parsed.size() != 1) throw UsageError{"--excited must be an integer or 'half'"};
      excited = parsed[0];
      if (excited < 1) throw UsageError{"--excited must be >= 1"};
    }
    params["mode"] = "over-N";
    params["excited"] = a.excited;
    records.resize(dots.size());
    std::size_t written = 0;
    check(qdent_sweep_over_n(excited, dots.data(), dots.size(), &options, records.data(), records.size(), &written));
  }

  std::string out = csv_preamble(manifest("sweep", params), {"N", "M", "kt_star", "E_max", "e_max", "E_MES"});
  for (const auto& r : records) out += record_row(r);
  write_output(a.out, out);
}

// ---- fit ------------------------------------------------------------------

struct FitArgs {
  int excited = 0;
  std::string dots;
  int grid = 4096;
  double tol = 1e-12;
  std::string out;
};

void run_fit(const FitArgs& a) {
  const auto options = search_options(a.grid, a.tol);
  const auto dots = parse_int_range(a.dots);
  qdent_fit fit{};
  std::vector<double> inverse(dots.size());
  check(qdent_fit_inverse_linear(a.excited, dots.data(), dots.size(), &options, &fit, inverse.data()));

  const json params{{"excited", a.excited}, {"dots", a.dots}, {"grid", a.grid}, {"tol", a.tol}};
  const json m = manifest("fit", params);
  const json result{{"excitations", fit.excited}, {"slope", fit.slope},   {"intercept", fit.intercept},
                    {"residual_rms", fit.residual_rms}, {"domain", dots}, {"manifest", m}};
  write_output("-", result.dump() + "\n");

  if (!a.out.empty()) {
    std::string csv = csv_preamble(m, {"N", "inv_E_max"});
    for (std::size_t i = 0; i < dots.size(); ++i) csv += std::to_string(dots[i]) + ',' + format_number(inverse[i]) + '\n';
    write_output(a.out, csv);
  }
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  int max_dots = 10;
  int samples = 25;
  double tol = 1e-9;
  std::size_t max_dimension = 0;
  bool corrupt_table = false;
  std::string out = "-";
};

int run_verify(const VerifyArgs& a) {
  if (a.max_dots < 2) throw UsageError{"--max-dots must be >= 2"};
  if (a.samples < 1) throw UsageError{"--samples must be >= 1"};
  if (!(a.tol > 0.0)) throw UsageError{"--tol must be positive"};

  const qdent_verify_options options{a.max_dots, a.samples, a.tol, a.max_dimension, a.corrupt_table ? 1 : 0};
  std::vector<qdent_mismatch> mismatches;
  qdent_verify_summary summary{};
  check(qdent_verify(
      &options,
      [](const qdent_mismatch* m, void* user) { static_cast<std::vector<qdent_mismatch>*>(user)->push_back(*m); },
      &mismatches, &summary));

  std::cerr << "verify: " << summary.checked << " samples, " << summary.mismatches
            << " mismatches, max |diff| = " << format_number(summary.max_abs_diff) << '\n';
  if (mismatches.empty()) return kExitOk;

  const json params{{"max_dots", a.max_dots}, {"samples", a.samples}, {"tol", a.tol},
                    {"corrupt_table", a.corrupt_table}};
  std::string out = csv_preamble(manifest("verify", params), {"N", "M", "kt", "closed_form", "oracle", "abs_diff"});
  for (const auto& m : mismatches) {
    out += std::to_string(m.dots) + ',' + std::to_string(m.excited) + ',' + format_number(m.kt) + ',' +
           format_number(m.closed_form) + ',' + format_number(m.oracle) + ',' + format_number(m.abs_diff) + '\n';
  }
  write_output(a.out, out);
  return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact entanglement dynamics of the equivalent-neighbor quantum-dot model"};
  app.set_version_flag("--version", std::string(qdent_version()));
  app.require_subcommand(1);

  TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("trace", "Entropy and Schmidt weights on a uniform kt grid (CSV)");
  trace_cmd->add_option("--dots", trace.dots, "Number of dots N")->required();
  trace_cmd->add_option("--excited", trace.excited, "Initially excited dots M")->required();
  trace_cmd->add_option("--kt-max", trace.kt_max, "Upper end of the kt range");
  trace_cmd->add_option("--periods", trace.periods, "kt range as a multiple of the entropy period");
  trace_cmd->add_option("--steps", trace.steps, "Number of intervals (rows = steps + 1)")->required();
  trace_cmd->add_option("--out", trace.out, "Output path, '-' for stdout");

  MaxentArgs maxent;
  auto* maxent_cmd = app.add_subcommand("maxent", "Maximum entanglement over one period (JSON)");
  maxent_cmd->add_option("--dots", maxent.dots, "Number of dots N")->required();
  maxent_cmd->add_option("--excited", maxent.excited, "Initially excited dots M")->required();
  maxent_cmd->add_option("--grid", maxent.grid, "Coarse grid points per period");
  maxent_cmd->add_option("--tol", maxent.tol, "Golden-section kt tolerance");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Maximum entanglement across M or N (CSV)");
  sweep_cmd->add_flag("--over-M", sweep.over_m, "Sweep M = 1..N-1 at fixed N");
  sweep_cmd->add_flag("--over-N", sweep.over_n, "Sweep N over a range at fixed M");
  sweep_cmd->add_option("--dots", sweep.dots, "N (over-M) or an N range like 2..31 (over-N)")->required();
  sweep_cmd->add_option("--excited", sweep.excited, "M for over-N, or 'half' for M = floor(N/2)");
  sweep_cmd->add_option("--grid", sweep.grid, "Coarse grid points per period");
  sweep_cmd->add_option("--tol", sweep.tol, "Golden-section kt tolerance");
  sweep_cmd->add_option("--out", sweep.out, "Output path, '-' for stdout");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Least-squares line through 1/E_max versus N (JSON + CSV)");
  fit_cmd->add_option("--excited", fit.excited, "Excitation number M")->required();
  fit_cmd->add_option("--dots", fit.dots, "N range, every N above the critical size")->required();
  fit_cmd->add_option("--grid", fit.grid, "Coarse grid points per period");
  fit_cmd->add_option("--tol", fit.tol, "Golden-section kt tolerance");
  fit_cmd->add_option("--out", fit.out, "Path for the (N, 1/E_max) CSV, '-' for stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the closed form against exact diagonalization");
  verify_cmd->add_option("--max-dots", verify.max_dots, "Largest N checked");
  verify_cmd->add_option("--samples", verify.samples, "kt samples per period");
  verify_cmd->add_option("--tol", verify.tol, "Absolute entropy tolerance");
  verify_cmd->add_option("--max-dim", verify.max_dimension, "Oracle sector dimension budget");
  verify_cmd->add_option("--out", verify.out, "Path for the failure CSV, '-' for stdout");
  verify_cmd->add_flag("--corrupt-table", verify.corrupt_table)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*trace_cmd) run_trace(trace);
    if (*maxent_cmd) run_maxent(maxent);
    if (*sweep_cmd) run_sweep(sweep);
    if (*fit_cmd) run_fit(fit);
    if (*verify_cmd) return run_verify(verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
