// C API boundary: translates between the opaque-handle C surface and the C++
// core. No exception escapes past this file.
#include "lpbilliards.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "lpbilliards/csv.hpp"
#include "lpbilliards/reflect.hpp"
#include "lpbilliards/runner.hpp"
#include "lpbilliards/summary.hpp"
#include "lpbilliards/svg.hpp"

struct lpb_report {
  lpb::RunReport impl;
};

struct lpb_table {
  std::vector<lpb::OrbitRecord> rows;
};

namespace {

lpb_status status_from(const lpb::Error& error) {
  switch (error.code()) {
    case lpb::ErrorCode::InvalidArgument:
      return LPB_ERR_INVALID_ARGUMENT;
    case lpb::ErrorCode::DegeneratePolygon:
      return LPB_ERR_DEGENERATE_POLYGON;
    case lpb::ErrorCode::SingularHessian:
      return LPB_ERR_SINGULAR_HESSIAN;
    case lpb::ErrorCode::Nonfinite:
      return LPB_ERR_INTERNAL;
    case lpb::ErrorCode::NotCertified:
      return LPB_ERR_NOT_CERTIFIED;
    case lpb::ErrorCode::Classification:
      return LPB_ERR_CLASSIFICATION;
    case lpb::ErrorCode::Statistics:
      return LPB_ERR_STATISTICS;
    case lpb::ErrorCode::Io:
      return LPB_ERR_IO;
    case lpb::ErrorCode::Parse:
      return LPB_ERR_PARSE;
  }
  return LPB_ERR_INTERNAL;
}

// Run `body` translating exceptions to status codes.
template <typename Fn>
lpb_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const lpb::Error& error) {
    return status_from(error);
  } catch (const std::bad_alloc&) {
    return LPB_ERR_NOMEM;
  } catch (...) {
    return LPB_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void fill_orbit(const lpb::OrbitRecord& record, lpb_orbit* out) {
  *out = lpb_orbit{};
  out->p = record.p;
  out->n = record.n;
  for (int i = 0; i < record.n && i < LPB_MAX_BOUNCES; ++i) {
    out->theta[i] = record.theta[i];
  }
  out->alpha = record.alpha;
  out->beta = record.beta;
  out->perimeter = record.perimeter;
  out->residual = record.residual;
  out->certified = 1;
  out->n_plus = record.signature.n_plus;
  out->n_minus = record.signature.n_minus;
  out->n_zero = record.signature.n_zero;
  out->rot_num = record.rotation.num;
  out->rot_den = record.rotation.den;
  out->first_seed_index = record.first_seed_index;
  out->steps = 0;
}

lpb::NewtonConfig newton_config_from(const lpb_newton_params* params) {
  lpb::NewtonConfig config;
  if (params) {
    config.max_steps = params->max_steps;
    config.step_tol = params->step_tol;
    config.threshold = params->threshold;
  }
  return config;
}

}  // namespace

extern "C" {

const char* lpb_status_message(lpb_status status) {
  switch (status) {
    case LPB_OK:
      return "ok";
    case LPB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case LPB_ERR_DEGENERATE_POLYGON:
      return "degenerate polygon (chord shorter than 1e-9)";
    case LPB_ERR_SINGULAR_HESSIAN:
      return "singular Hessian (condition number above 1e14)";
    case LPB_ERR_NOT_CERTIFIED:
      return "alpha-test failed";
    case LPB_ERR_CLASSIFICATION:
      return "classification failed";
    case LPB_ERR_STATISTICS:
      return "insufficient data for statistics";
    case LPB_ERR_IO:
      return "I/O failure";
    case LPB_ERR_PARSE:
      return "parse failure";
    case LPB_ERR_NOMEM:
      return "out of memory";
    case LPB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

uint32_t lpb_abi_version(void) { return LPB_ABI_VERSION; }

void lpb_newton_params_init(lpb_newton_params* params) {
  if (!params) return;
  const lpb::NewtonConfig defaults;
  params->max_steps = defaults.max_steps;
  params->step_tol = defaults.step_tol;
  params->threshold = defaults.threshold;
}

lpb_status lpb_verify_orbit(double p, const double* theta, int n,
                            const lpb_newton_params* params, lpb_orbit* out) {
  if (!theta || !out || n < 2 || n > LPB_MAX_BOUNCES) {
    return LPB_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    const lpb::BoundarySpec spec{p};
    const lpb::NewtonConfig config = newton_config_from(params);
    Eigen::VectorXd seed(n);
    for (int i = 0; i < n; ++i) seed[i] = theta[i];

    lpb::PolishResult polished = lpb::polish_and_certify(spec, seed, config);
    lpb::CanonicalForm canonical = lpb::canonicalize(polished.theta);

    *out = lpb_orbit{};
    out->p = p;
    out->n = n;
    for (int i = 0; i < n; ++i) out->theta[i] = canonical.theta[i];
    out->alpha = polished.certificate.alpha;
    out->beta = polished.certificate.beta;
    out->perimeter = polished.outcome.eval.value;
    out->residual = lpb::reflection_residual(spec, canonical.theta);
    out->certified = polished.certificate.certified ? 1 : 0;
    const lpb::MorseSignature sig =
        lpb::morse_signature_from_eigenvalues(polished.outcome.eigenvalues);
    out->n_plus = sig.n_plus;
    out->n_minus = sig.n_minus;
    out->n_zero = sig.n_zero;
    const lpb::RotationNumber rot = lpb::rotation_number(canonical.theta);
    out->rot_num = rot.num;
    out->rot_den = rot.den;
    out->first_seed_index = 0;
    out->steps = static_cast<int>(polished.trace.size());
    return LPB_OK;
  });
}

void lpb_run_params_init(lpb_run_params* params) {
  if (!params) return;
  const lpb::RunConfig defaults;
  params->p = defaults.spec.p;
  params->n_bounces = defaults.n_bounces;
  params->n_seeds = defaults.n_seeds;
  params->rng_seed = defaults.rng_seed;
  lpb_newton_params_init(&params->newton);
  params->batch_size = defaults.batch_size;
  params->workers = defaults.workers;
}

lpb_status lpb_run(const lpb_run_params* params, lpb_report** out) {
  if (!params || !out) return LPB_ERR_INVALID_ARGUMENT;
  if (params->n_bounces > LPB_MAX_BOUNCES) return LPB_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    lpb::RunConfig config;
    config.spec.p = params->p;
    config.n_bounces = params->n_bounces;
    config.n_seeds = params->n_seeds;
    config.rng_seed = params->rng_seed;
    config.newton = newton_config_from(&params->newton);
    config.batch_size = params->batch_size;
    config.workers = params->workers;
    auto report = std::make_unique<lpb_report>();
    report->impl = lpb::run(config);
    *out = report.release();
    return LPB_OK;
  });
}

void lpb_report_free(lpb_report* report) { delete report; }

uint64_t lpb_report_orbit_count(const lpb_report* report) {
  return report ? report->impl.records.size() : 0;
}

lpb_status lpb_report_orbit(const lpb_report* report, uint64_t index,
                            lpb_orbit* out) {
  if (!report || !out || index >= report->impl.records.size()) {
    return LPB_ERR_INVALID_ARGUMENT;
  }
  fill_orbit(report->impl.records[static_cast<size_t>(index)], out);
  return LPB_OK;
}

uint64_t lpb_report_failure_count(const lpb_report* report, const char* cause) {
  if (!report) return 0;
  uint64_t total = 0;
  for (const auto& [key, count] : report->impl.failures) {
    if (!cause || std::strcmp(lpb::failure_cause_name(key), cause) == 0) {
      total += count;
    }
  }
  return total;
}

lpb_status lpb_report_power_law(const lpb_report* report,
                                double* exponent_out) {
  if (!report || !exponent_out) return LPB_ERR_INVALID_ARGUMENT;
  if (!report->impl.power_law_exponent) return LPB_ERR_STATISTICS;
  *exponent_out = *report->impl.power_law_exponent;
  return LPB_OK;
}

lpb_status lpb_report_write_csv(const lpb_report* report, const char* path) {
  if (!report || !path) return LPB_ERR_INVALID_ARGUMENT;
  return guarded([&]() {
    lpb::csv_write_file(path, report->impl.records,
                        report->impl.config.n_bounces);
    return LPB_OK;
  });
}

lpb_status lpb_report_summary(const lpb_report* report, char** text_out) {
  if (!report || !text_out) return LPB_ERR_INVALID_ARGUMENT;
  *text_out = nullptr;
  return guarded([&]() {
    *text_out = copy_string(lpb::format_summary(report->impl));
    return LPB_OK;
  });
}

lpb_status lpb_table_read_csv(const char* path, lpb_table** out,
                              uint64_t* bad_line) {
  if (!path || !out) return LPB_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  if (bad_line) *bad_line = 0;
  return guarded([&]() {
    auto table = std::make_unique<lpb_table>();
    table->rows = lpb::csv_read_file(path, bad_line);
    *out = table.release();
    return LPB_OK;
  });
}

void lpb_table_free(lpb_table* table) { delete table; }

uint64_t lpb_table_count(const lpb_table* table) {
  return table ? table->rows.size() : 0;
}

lpb_status lpb_table_orbit(const lpb_table* table, uint64_t index,
                           lpb_orbit* out) {
  if (!table || !out || index >= table->rows.size()) {
    return LPB_ERR_INVALID_ARGUMENT;
  }
  fill_orbit(table->rows[static_cast<size_t>(index)], out);
  return LPB_OK;
}

lpb_status lpb_table_stats(const lpb_table* table, char** text_out) {
  if (!table || !text_out) return LPB_ERR_INVALID_ARGUMENT;
  *text_out = nullptr;
  return guarded([&]() {
    *text_out = copy_string(lpb::format_stats(table->rows));
    return LPB_OK;
  });
}

lpb_status lpb_orbit_svg(double p, const double* theta, int n,
                         char** svg_out) {
  if (!theta || !svg_out || n < 2 || n > LPB_MAX_BOUNCES) {
    return LPB_ERR_INVALID_ARGUMENT;
  }
  *svg_out = nullptr;
  return guarded([&]() {
    const lpb::BoundarySpec spec{p};
    Eigen::VectorXd vec(n);
    for (int i = 0; i < n; ++i) vec[i] = theta[i];
    *svg_out = copy_string(lpb::orbit_svg(spec, vec));
    return LPB_OK;
  });
}

void lpb_string_free(char* text) { std::free(text); }

}  // extern "C"
