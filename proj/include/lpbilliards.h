/* lpbilliards — periodic billiard orbits in planar L^p balls.
 *
 * Public C API of the shared library. The library finds periodic billiard
 * orbits in the domain |x|^p + |y|^p <= 1 (p >= 2) as critical points of the
 * polygon perimeter functional, certifies convergence with an alpha-criterion
 * (alpha = beta * gamma with beta the Newton step norm and gamma half the
 * spectral condition number of the Hessian), classifies each orbit by Morse
 * signature and rotation number, and deduplicates up to cyclic shifts,
 * reversal, and mod-1 translation of the parameter vector.
 *
 * All handles returned by this API are opaque; free them with the matching
 * *_free function. All functions returning lpb_status report failure through
 * the status code and never throw or abort.
 */
#ifndef LPBILLIARDS_H
#define LPBILLIARDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define LPB_API __declspec(dllexport)
#else
#  define LPB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define LPB_ABI_VERSION 1u

/* Maximum supported bounce count N (size of fixed arrays in lpb_orbit). */
#define LPB_MAX_BOUNCES 64

typedef enum lpb_status {
  LPB_OK = 0,
  LPB_ERR_INVALID_ARGUMENT = 1,  /* bad parameter values (p < 2, N out of range, ...) */
  LPB_ERR_DEGENERATE_POLYGON = 2,/* a chord shorter than 1e-9 */
  LPB_ERR_SINGULAR_HESSIAN = 3,  /* spectral condition number above 1e14 */
  LPB_ERR_NOT_CERTIFIED = 4,     /* alpha-test failed where certification is required */
  LPB_ERR_CLASSIFICATION = 5,    /* eigendecomposition failure or non-integer winding */
  LPB_ERR_STATISTICS = 6,        /* power-law fit needs >= 3 positive curve points */
  LPB_ERR_IO = 7,                /* file could not be opened / written */
  LPB_ERR_PARSE = 8,             /* malformed CSV or literal */
  LPB_ERR_NOMEM = 9,
  LPB_ERR_INTERNAL = 10
} lpb_status;

/* Static message for a status code (never NULL). */
LPB_API const char* lpb_status_message(lpb_status status);

LPB_API uint32_t lpb_abi_version(void);

/* Newton/certification configuration. Call lpb_newton_params_init to obtain
 * the defaults (max_steps 50, step_tol 1e-12, threshold 0.15767). */
typedef struct lpb_newton_params {
  int max_steps;      /* >= 1 */
  double step_tol;    /* > 0; early stop on Newton step norm */
  double threshold;   /* certification threshold on alpha; in (0, sqrt(3)-1) */
} lpb_newton_params;

LPB_API void lpb_newton_params_init(lpb_newton_params* params);

/* One orbit (or orbit candidate). POD, fixed-size; n <= LPB_MAX_BOUNCES.
 * theta holds the canonical parameter vector (entries in [0,1), smallest
 * entry first, lexicographic minimum over cyclic shifts of both orientations).
 * residual is the maximum reflection-law residual over vertices; it is
 * populated by lpb_verify_orbit and by records from lpb_run, and is NaN for
 * rows read back from CSV (the CSV schema does not store it). steps is the
 * number of Newton iterations performed (0 for CSV rows). */
typedef struct lpb_orbit {
  double p;
  int n;
  double theta[LPB_MAX_BOUNCES];
  double alpha;
  double beta;
  double perimeter;
  double residual;
  int certified;                /* 0 or 1 */
  int n_plus, n_minus, n_zero;  /* Morse signature of the Hessian */
  int rot_num, rot_den;         /* rotation number, reduced; 0/1 for winding 0 */
  uint64_t first_seed_index;    /* earliest seed that produced the orbit; 0 in verify */
  int steps;
} lpb_orbit;

/* Polish a parameter vector with Newton's method (up to params->max_steps
 * steps, early stop on step norm < params->step_tol), certify at the final
 * iterate, classify, and evaluate the reflection residual. params may be NULL
 * for defaults. Returns LPB_OK with out->certified = 0 when the alpha-test
 * fails; hard failures (degenerate polygon, singular Hessian, invalid input)
 * are reported as status codes. */
LPB_API lpb_status lpb_verify_orbit(double p,
                                    const double* theta,
                                    int n,
                                    const lpb_newton_params* params,
                                    lpb_orbit* out);

/* Sweep configuration for lpb_run. Call lpb_run_params_init for defaults. */
typedef struct lpb_run_params {
  double p;
  int n_bounces;
  uint64_t n_seeds;
  uint64_t rng_seed;          /* seeds std::mt19937_64 */
  lpb_newton_params newton;
  uint64_t batch_size;        /* discovery-curve bucketing; default 1000 */
  int workers;                /* <= 0 selects hardware concurrency */
} lpb_run_params;

LPB_API void lpb_run_params_init(lpb_run_params* params);

/* Result of a sweep: unique certified orbits plus discovery statistics. */
typedef struct lpb_report lpb_report;

/* Run the full pipeline: seed generation, parallel polish-and-certify,
 * reflection gate, canonicalization, classification, coalescing. The result
 * is a pure function of the parameters; the worker count does not affect it. */
LPB_API lpb_status lpb_run(const lpb_run_params* params, lpb_report** out);

LPB_API void lpb_report_free(lpb_report* report);

LPB_API uint64_t lpb_report_orbit_count(const lpb_report* report);

/* Fetch one record (index < lpb_report_orbit_count). */
LPB_API lpb_status lpb_report_orbit(const lpb_report* report,
                                    uint64_t index,
                                    lpb_orbit* out);

/* Number of per-seed failures for a cause in {"seed_gap", "degenerate",
 * "singular", "nonfinite", "not_certified", "reflection_gate",
 * "classification"}; NULL counts all failures. Unknown causes count 0. */
LPB_API uint64_t lpb_report_failure_count(const lpb_report* report,
                                          const char* cause);

/* Least-squares slope of log(cumulative unique orbits) vs log(seeds
 * consumed). LPB_ERR_STATISTICS when fewer than 3 curve points are positive. */
LPB_API lpb_status lpb_report_power_law(const lpb_report* report,
                                        double* exponent_out);

/* Write all records as CSV (schema: p,N,theta_0..theta_{N-1},alpha,beta,
 * perimeter,n_plus,n_minus,n_zero,rot_num,rot_den,first_seed_index; reals
 * rendered as shortest round-trip decimals; header row; LF line endings). */
LPB_API lpb_status lpb_report_write_csv(const lpb_report* report,
                                        const char* path);

/* Human-readable run summary (counts per signature and rotation, perimeter
 * ranges, failure counts, discovery curve, power-law exponent). The string is
 * heap-allocated; release it with lpb_string_free. */
LPB_API lpb_status lpb_report_summary(const lpb_report* report, char** text_out);

/* A CSV file read back into memory. */
typedef struct lpb_table lpb_table;

/* Parse a CSV produced by lpb_report_write_csv. On LPB_ERR_PARSE, *bad_line
 * (when non-NULL) receives the 1-based line number of the first offending
 * line. On LPB_ERR_IO the file could not be opened. */
LPB_API lpb_status lpb_table_read_csv(const char* path,
                                      lpb_table** out,
                                      uint64_t* bad_line);

LPB_API void lpb_table_free(lpb_table* table);

LPB_API uint64_t lpb_table_count(const lpb_table* table);

LPB_API lpb_status lpb_table_orbit(const lpb_table* table,
                                   uint64_t index,
                                   lpb_orbit* out);

/* Per-signature statistics table (count, percentage, rotation distribution,
 * perimeter range). Release with lpb_string_free. */
LPB_API lpb_status lpb_table_stats(const lpb_table* table, char** text_out);

/* Render one orbit as a standalone SVG: the L^p boundary sampled with 1024
 * segments, the closed orbit polygon (exactly one closed path), vertex marks,
 * and a label with the Morse signature and rotation number computed at theta.
 * Release *svg_out with lpb_string_free. */
LPB_API lpb_status lpb_orbit_svg(double p,
                                 const double* theta,
                                 int n,
                                 char** svg_out);

LPB_API void lpb_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LPBILLIARDS_H */
