// lpb — command-line frontend for the lpbilliards shared library.
//
// Subcommands:
//   find   <p> <N> <n_seeds> [--rng-seed --threshold --max-steps --step-tol
//                             --out --workers --batch-size]
//   verify <p> "<[t0, t1, ...]>" [--threshold --max-steps --step-tol]
//   plot   (--csv FILE --row K | <p> "<[t0, ...]>") [--out FILE.svg]
//   stats  --csv FILE
//
// Exit codes: 0 success, 1 I/O failure, 2 usage/parse/validation failure,
// 3 verification failed (not certified, or reflection residual >= 1e-6).
//
// This tool talks to the library exclusively through the C API in
// lpbilliards.h.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpbilliards.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotCertified = 3;

constexpr double kAlphaTheoremBound = 0.7320508075688772935;  // sqrt(3) - 1
constexpr double kResidualTolerance = 1e-6;

// Shortest round-trip decimal (matches the library's CSV formatting).
std::string fmt(double value) {
  char buffer[64];
  int written = std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  double parsed = 0.0;
  // Trim to the shortest representation that still round-trips.
  for (int precision = 1; precision <= 17; ++precision) {
    written = std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    if (written > 0 && std::sscanf(buffer, "%lf", &parsed) == 1 &&
        parsed == value) {
      break;
    }
  }
  return buffer;
}

// p rendered with a decimal point, as in the default CSV file name.
std::string fmt_p(double value) {
  std::string text = fmt(value);
  if (text.find_first_not_of("0123456789") == std::string::npos) text += ".0";
  return text;
}

// Parse a bracketed comma-separated list of reals: "[0.1, 0.2, 0.3]".
bool parse_theta_literal(std::string text, std::vector<double>& out) {
  out.clear();
  const auto strip = [](std::string& s) {
    const char* ws = " \t\r\n";
    const size_t begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) {
      s.clear();
      return;
    }
    const size_t end = s.find_last_not_of(ws);
    s = s.substr(begin, end - begin + 1);
  };
  strip(text);
  if (!text.empty() && text.front() == '[') text.erase(0, 1);
  if (!text.empty() && text.back() == ']') text.pop_back();
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    strip(token);
    if (token.empty()) return false;
    try {
      size_t consumed = 0;
      out.push_back(std::stod(token, &consumed));
      if (consumed != token.size()) return false;
    } catch (...) {
      return false;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out.size() >= 2;
}

int exit_code_for(lpb_status status) {
  switch (status) {
    case LPB_OK:
      return kExitOk;
    case LPB_ERR_IO:
      return kExitIo;
    case LPB_ERR_INVALID_ARGUMENT:
    case LPB_ERR_DEGENERATE_POLYGON:
    case LPB_ERR_PARSE:
      return kExitUsage;
    case LPB_ERR_NOT_CERTIFIED:
      return kExitNotCertified;
    default:
      return kExitIo;
  }
}

int report_error(const char* where, lpb_status status) {
  std::fprintf(stderr, "lpb %s: %s\n", where, lpb_status_message(status));
  return exit_code_for(status);
}

bool validate_common(double p, int n, std::uint64_t n_seeds, double threshold,
                     int max_steps, double step_tol) {
  if (!(p >= 2.0)) {
    std::fprintf(stderr, "lpb: p must satisfy p >= 2\n");
    return false;
  }
  if (n < 2 || n > LPB_MAX_BOUNCES) {
    std::fprintf(stderr, "lpb: N must lie in [2, %d]\n", LPB_MAX_BOUNCES);
    return false;
  }
  if (n_seeds < 1) {
    std::fprintf(stderr, "lpb: n_seeds must be >= 1\n");
    return false;
  }
  if (!(threshold > 0.0 && threshold < kAlphaTheoremBound)) {
    std::fprintf(stderr, "lpb: threshold must lie in (0, sqrt(3)-1)\n");
    return false;
  }
  if (max_steps < 1) {
    std::fprintf(stderr, "lpb: max-steps must be >= 1\n");
    return false;
  }
  if (!(step_tol > 0.0)) {
    std::fprintf(stderr, "lpb: step-tol must be > 0\n");
    return false;
  }
  return true;
}

void print_orbit(const lpb_orbit& orbit) {
  std::printf("certified=%s\n", orbit.certified ? "true" : "false");
  std::printf("alpha=%s\n", fmt(orbit.alpha).c_str());
  std::printf("beta=%s\n", fmt(orbit.beta).c_str());
  std::printf("perimeter=%s\n", fmt(orbit.perimeter).c_str());
  std::printf("signature=(%d,%d,%d)\n", orbit.n_plus, orbit.n_minus,
              orbit.n_zero);
  std::printf("rotation=%d/%d\n", orbit.rot_num, orbit.rot_den);
  std::printf("reflection_residual=%s\n", fmt(orbit.residual).c_str());
  std::printf("newton_steps=%d\n", orbit.steps);
  std::printf("theta_canonical=[");
  for (int i = 0; i < orbit.n; ++i) {
    std::printf("%s%s", i ? ", " : "", fmt(orbit.theta[i]).c_str());
  }
  std::printf("]\n");
}

int cmd_find(double p, int n, std::uint64_t n_seeds, std::uint64_t rng_seed,
             double threshold, int max_steps, double step_tol,
             std::string out_path, int workers, std::uint64_t batch_size) {
  if (!validate_common(p, n, n_seeds, threshold, max_steps, step_tol)) {
    return kExitUsage;
  }
  if (batch_size < 1) {
    std::fprintf(stderr, "lpb: batch-size must be >= 1\n");
    return kExitUsage;
  }

  lpb_run_params params;
  lpb_run_params_init(&params);
  params.p = p;
  params.n_bounces = n;
  params.n_seeds = n_seeds;
  params.rng_seed = rng_seed;
  params.newton.threshold = threshold;
  params.newton.max_steps = max_steps;
  params.newton.step_tol = step_tol;
  params.batch_size = batch_size;
  params.workers = workers;

  lpb_report* report = nullptr;
  lpb_status status = lpb_run(&params, &report);
  if (status != LPB_OK) return report_error("find", status);

  if (out_path.empty()) {
    out_path = "p" + fmt_p(p) + "_N" + std::to_string(n) + "_orbits.csv";
  }
  status = lpb_report_write_csv(report, out_path.c_str());
  if (status != LPB_OK) {
    lpb_report_free(report);
    return report_error("find", status);
  }

  char* summary = nullptr;
  status = lpb_report_summary(report, &summary);
  if (status == LPB_OK && summary) {
    std::fputs(summary, stdout);
    lpb_string_free(summary);
  }
  std::printf("csv=%s\n", out_path.c_str());
  lpb_report_free(report);
  return kExitOk;
}

int cmd_verify(double p, const std::string& theta_literal, double threshold,
               int max_steps, double step_tol) {
  std::vector<double> theta;
  if (!parse_theta_literal(theta_literal, theta)) {
    std::fprintf(stderr,
                 "lpb verify: expected a bracketed list of >= 2 reals, e.g. "
                 "\"[0.0657, 0.375, 0.6843]\"\n");
    return kExitUsage;
  }
  if (!validate_common(p, static_cast<int>(theta.size()), 1, threshold,
                       max_steps, step_tol)) {
    return kExitUsage;
  }

  lpb_newton_params params;
  lpb_newton_params_init(&params);
  params.threshold = threshold;
  params.max_steps = max_steps;
  params.step_tol = step_tol;

  lpb_orbit orbit;
  const lpb_status status =
      lpb_verify_orbit(p, theta.data(), static_cast<int>(theta.size()),
                       &params, &orbit);
  if (status == LPB_ERR_SINGULAR_HESSIAN) {
    // Degenerate certification direction (e.g. the rotational null direction
    // at p = 2): report cleanly, never crash.
    std::printf("certified=false\n");
    std::printf("diagnostic=singular Hessian: %s\n",
                lpb_status_message(status));
    return kExitNotCertified;
  }
  if (status != LPB_OK) return report_error("verify", status);

  print_orbit(orbit);
  if (orbit.certified && orbit.residual < kResidualTolerance) return kExitOk;
  return kExitNotCertified;
}

int write_svg(double p, const std::vector<double>& theta,
              const std::string& out_path) {
  char* svg = nullptr;
  const lpb_status status = lpb_orbit_svg(
      p, theta.data(), static_cast<int>(theta.size()), &svg);
  if (status != LPB_OK) return report_error("plot", status);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    lpb_string_free(svg);
    std::fprintf(stderr, "lpb plot: cannot write %s\n", out_path.c_str());
    return kExitIo;
  }
  file << svg;
  file.flush();
  const bool ok = static_cast<bool>(file);
  lpb_string_free(svg);
  if (!ok) {
    std::fprintf(stderr, "lpb plot: write failed: %s\n", out_path.c_str());
    return kExitIo;
  }
  std::printf("svg=%s\n", out_path.c_str());
  return kExitOk;
}

int cmd_plot_csv(const std::string& csv_path, std::uint64_t row,
                 const std::string& out_path) {
  lpb_table* table = nullptr;
  uint64_t bad_line = 0;
  lpb_status status = lpb_table_read_csv(csv_path.c_str(), &table, &bad_line);
  if (status == LPB_ERR_PARSE) {
    std::fprintf(stderr, "lpb plot: malformed CSV at line %" PRIu64 "\n",
                 bad_line);
    return kExitUsage;
  }
  if (status != LPB_OK) {
    // Missing file is a usage error for plot (the row reference is dangling).
    std::fprintf(stderr, "lpb plot: cannot read %s\n", csv_path.c_str());
    return kExitUsage;
  }
  lpb_orbit orbit;
  status = lpb_table_orbit(table, row, &orbit);
  if (status != LPB_OK) {
    std::fprintf(stderr,
                 "lpb plot: row %" PRIu64 " out of range (CSV has %" PRIu64
                 " rows; rows are 0-based)\n",
                 row, lpb_table_count(table));
    lpb_table_free(table);
    return kExitUsage;
  }
  std::vector<double> theta(orbit.theta, orbit.theta + orbit.n);
  const double p = orbit.p;
  lpb_table_free(table);
  return write_svg(p, theta, out_path);
}

int cmd_stats(const std::string& csv_path) {
  lpb_table* table = nullptr;
  uint64_t bad_line = 0;
  lpb_status status = lpb_table_read_csv(csv_path.c_str(), &table, &bad_line);
  if (status == LPB_ERR_PARSE) {
    std::fprintf(stderr, "lpb stats: malformed CSV at line %" PRIu64 "\n",
                 bad_line);
    return kExitUsage;
  }
  if (status != LPB_OK) return report_error("stats", status);
  char* text = nullptr;
  status = lpb_table_stats(table, &text);
  lpb_table_free(table);
  if (status != LPB_OK) return report_error("stats", status);
  std::fputs(text, stdout);
  lpb_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic billiard orbits in planar L^p balls"};
  app.require_subcommand(1);

  // --- find ---
  auto* find = app.add_subcommand(
      "find", "sweep random seeds and write unique certified orbits as CSV");
  double find_p = 3.0;
  int find_n = 5;
  std::uint64_t find_seeds = 1000;
  std::uint64_t find_rng_seed = 0;
  double find_threshold = 0.15767;
  int find_max_steps = 50;
  double find_step_tol = 1e-12;
  std::string find_out;
  int find_workers = 0;
  std::uint64_t find_batch = 1000;
  find->add_option("p", find_p, "ball exponent (p >= 2)")->required();
  find->add_option("N", find_n, "bounce count")->required();
  find->add_option("n_seeds", find_seeds, "number of random seeds")->required();
  find->add_option("--rng-seed", find_rng_seed, "PRNG seed (default 0)");
  find->add_option("--threshold", find_threshold,
                   "certification threshold (default 0.15767)");
  find->add_option("--max-steps", find_max_steps,
                   "Newton step limit (default 50)");
  find->add_option("--step-tol", find_step_tol,
                   "Newton early-stop step norm (default 1e-12)");
  find->add_option("--out", find_out,
                   "output CSV path (default p{p}_N{N}_orbits.csv)");
  find->add_option("--workers", find_workers,
                   "worker threads; 0 = hardware concurrency");
  find->add_option("--batch-size", find_batch,
                   "discovery-curve bucket size (default 1000)");

  // --- verify ---
  auto* verify = app.add_subcommand(
      "verify", "polish a parameter vector and certify the result");
  double verify_p = 3.0;
  std::string verify_theta;
  double verify_threshold = 0.15767;
  int verify_max_steps = 50;
  double verify_step_tol = 1e-12;
  verify->add_option("p", verify_p, "ball exponent (p >= 2)")->required();
  verify->add_option("theta", verify_theta,
                     "bracketed parameter list, e.g. \"[0.06, 0.37, 0.68]\"")
      ->required();
  verify->add_option("--threshold", verify_threshold,
                     "certification threshold (default 0.15767)");
  verify->add_option("--max-steps", verify_max_steps,
                     "Newton step limit (default 50)");
  verify->add_option("--step-tol", verify_step_tol,
                     "Newton early-stop step norm (default 1e-12)");

  // --- plot ---
  auto* plot = app.add_subcommand(
      "plot", "render an orbit as SVG (from a CSV row or a literal)");
  std::string plot_csv;
  std::uint64_t plot_row = 0;
  std::string plot_out = "orbit.svg";
  double plot_p = 0.0;
  std::string plot_theta;
  plot->add_option("--csv", plot_csv, "CSV produced by find");
  plot->add_option("--row", plot_row, "0-based row index into --csv");
  plot->add_option("--out", plot_out, "output SVG path (default orbit.svg)");
  plot->add_option("p", plot_p, "ball exponent (direct mode)");
  plot->add_option("theta", plot_theta, "bracketed parameter list");

  // --- stats ---
  auto* stats = app.add_subcommand(
      "stats", "per-signature statistics of a CSV produced by find");
  std::string stats_csv;
  stats->add_option("--csv", stats_csv, "CSV produced by find")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::fprintf(stderr, "lpb: %s\n", error.what());
    return kExitUsage;
  }

  if (find->parsed()) {
    return cmd_find(find_p, find_n, find_seeds, find_rng_seed, find_threshold,
                    find_max_steps, find_step_tol, find_out, find_workers,
                    find_batch);
  }
  if (verify->parsed()) {
    return cmd_verify(verify_p, verify_theta, verify_threshold,
                      verify_max_steps, verify_step_tol);
  }
  if (plot->parsed()) {
    const bool csv_mode = !plot_csv.empty();
    const bool direct_mode = plot->count("p") > 0 && !plot_theta.empty();
    if (csv_mode == direct_mode || (csv_mode && plot->count("--row") == 0)) {
      std::fprintf(stderr,
                   "lpb plot: pass either --csv FILE --row K or  p theta\n");
      return kExitUsage;
    }
    if (csv_mode) return cmd_plot_csv(plot_csv, plot_row, plot_out);
    std::vector<double> theta;
    if (!parse_theta_literal(plot_theta, theta)) {
      std::fprintf(stderr,
                   "lpb plot: expected a bracketed list of >= 2 reals\n");
      return kExitUsage;
    }
    if (!(plot_p >= 2.0) || theta.size() > LPB_MAX_BOUNCES) {
      std::fprintf(stderr, "lpb plot: invalid p or theta size\n");
      return kExitUsage;
    }
    return write_svg(plot_p, theta, plot_out);
  }
  if (stats->parsed()) {
    return cmd_stats(stats_csv);
  }
  return kExitUsage;
}
