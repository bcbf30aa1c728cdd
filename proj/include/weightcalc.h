#ifndef WEIGHTCALC_H
#define WEIGHTCALC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every entry point. On any nonzero status the
 * thread-local message from wc_last_error() describes the failure. */
typedef enum wc_status {
  WC_OK = 0,
  WC_ERROR_PARAM = 1,      /* invalid argument value */
  WC_ERROR_SHAPE = 2,      /* structurally invalid input (sizes, ordering) */
  WC_ERROR_DOMAIN = 3,     /* evaluation outside a validity range */
  WC_ERROR_TRUNCATION = 4, /* index beyond the represented range */
  WC_ERROR_PARSE = 5,      /* malformed textual input */
  WC_ERROR_HANDLE = 6,     /* null or already-freed handle */
  WC_ERROR_INTERNAL = 7    /* unexpected failure */
} wc_status;

/* Opaque handles. Create/free in pairs; freeing null is a no-op. */
typedef struct wc_sequence wc_sequence;
typedef struct wc_weightfn wc_weightfn;
typedef struct wc_conjugate wc_conjugate;
typedef struct wc_matrix wc_matrix;

/* Run configuration shared by checks and reports. Obtain defaults with
 * wc_config_default; identical config and inputs give byte-identical JSON. */
typedef struct wc_config {
  size_t truncation;      /* default sequence length P */
  size_t grid_points;     /* probe count for grid-sampled profiles */
  size_t d_max;           /* growth-index search bound */
  int ladder_max_exp;     /* constants searched over 2^0 .. 2^ladder_max_exp */
  double ladder_eps_rel;  /* plateau tolerance between window sups */
  double ladder_eps_final;/* plateau tolerance for the final window pair */
  uint64_t seed;          /* echoed into reports */
} wc_config;

void wc_config_default(wc_config* out);

/* Library version string (static storage; do not free). */
const char* wc_version(void);

/* Thread-local message for the most recent failure in this thread. The
 * pointer stays valid until the next failing call on the same thread. */
const char* wc_last_error(void);

/* Free a string returned through a char** output parameter. */
void wc_string_free(char* s);

/* --- sequences ---------------------------------------------------------- */

/* Parse "gevrey:<s>", "qgevrey:<q>", or a JSON object description. */
wc_status wc_sequence_parse(const char* spec, size_t default_truncation,
                            wc_sequence** out);
wc_status wc_sequence_gevrey(double s, size_t truncation, wc_sequence** out);
wc_status wc_sequence_qgevrey(double q, size_t truncation, wc_sequence** out);
/* quotients[i] holds log mu_{i+1} for i = 0..n-1. */
wc_status wc_sequence_from_quotients(const double* quotients, size_t n,
                                     wc_sequence** out);
/* logs[p] holds log M_p for p = 0..n-1 with logs[0] = 0. */
wc_status wc_sequence_from_logs(const double* logs, size_t n,
                                wc_sequence** out);
/* Deterministic random log-convex sequence; staircase != 0 selects the
 * run-and-jump generator. */
wc_status wc_sequence_random(uint64_t seed, size_t truncation, int staircase,
                             wc_sequence** out);
void wc_sequence_free(wc_sequence* s);

wc_status wc_sequence_truncation(const wc_sequence* s, size_t* out);
wc_status wc_sequence_log_at(const wc_sequence* s, size_t p, double* out);
wc_status wc_sequence_quotient_at(const wc_sequence* s, size_t p, double* out);
wc_status wc_sequence_summary_json(const wc_sequence* s, char** out);
wc_status wc_sequence_csv(const wc_sequence* s, char** out);

wc_status wc_sequence_product(const wc_sequence* a, const wc_sequence* b,
                              wc_sequence** out);
wc_status wc_sequence_power(const wc_sequence* s, double ell,
                            wc_sequence** out);
wc_status wc_sequence_tilde(const wc_sequence* s, unsigned a,
                            wc_sequence** out);
wc_status wc_sequence_geometric_scale(const wc_sequence* s, double logc,
                                      wc_sequence** out);
wc_status wc_sequence_convolve(const wc_sequence* a, const wc_sequence* b,
                               wc_sequence** out);
wc_status wc_sequence_lc_regularize(const wc_sequence* s, wc_sequence** out);

/* --- weight functions ---------------------------------------------------- */

wc_status wc_weightfn_of(const wc_sequence* s, wc_weightfn** out);
void wc_weightfn_free(wc_weightfn* f);

/* Evaluate at u = log t; valid for u up to the final breakpoint. */
wc_status wc_weightfn_eval_log(const wc_weightfn* f, double u, double* out);
/* Evaluate at t > 0. */
wc_status wc_weightfn_eval(const wc_weightfn* f, double t, double* out);
wc_status wc_weightfn_segments(const wc_weightfn* f, size_t* out);
wc_status wc_weightfn_u_max(const wc_weightfn* f, double* out);
wc_status wc_weightfn_csv(const wc_weightfn* f, char** out);

/* --- conjugates ---------------------------------------------------------- */

wc_status wc_conjugate_of(const wc_weightfn* f, wc_conjugate** out);
void wc_conjugate_free(wc_conjugate* c);
wc_status wc_conjugate_eval(const wc_conjugate* c, double x, double* out);
wc_status wc_conjugate_csv(const wc_conjugate* c, char** out);

/* --- matrices ------------------------------------------------------------ */

wc_status wc_matrix_of(const wc_weightfn* f, wc_matrix** out);
void wc_matrix_free(wc_matrix* m);
wc_status wc_matrix_truncation_for(const wc_matrix* m, double ell,
                                   size_t* out);
wc_status wc_matrix_row(const wc_matrix* m, double ell, wc_sequence** out);

/* --- condition checks (JSON results) ------------------------------------- */

/* Single-sequence conditions: "lc", "mg", "mg-root". */
wc_status wc_check_json(const wc_sequence* s, const char* condition,
                        const wc_config* cfg, char** out);
/* Scaled root condition at a fixed step d >= 1. */
wc_status wc_genmg_json(const wc_sequence* s, size_t d, const wc_config* cfg,
                        char** out);
/* Minimal passing step within the search bound. */
wc_status wc_growth_index_json(const wc_sequence* s, const wc_config* cfg,
                               char** out);
/* kind: "leq", "dominated", or "equivalent". */
wc_status wc_relate_json(const wc_sequence* a, const wc_sequence* b,
                         const char* kind, char** out);
wc_status wc_mixed_root_json(const wc_sequence* l, const wc_sequence* m,
                             unsigned a, const wc_config* cfg, char** out);
wc_status wc_weak_separativity_json(const wc_sequence* l, const wc_sequence* m,
                                    const wc_config* cfg, char** out);
/* Bundle of weight-function conditions for omega of the sequence. */
wc_status wc_omega_conditions_json(const wc_weightfn* f, const wc_config* cfg,
                                   char** out);
/* Quotient-root property of the family generated by f (first-row index). */
wc_status wc_matrix_root_json(const wc_weightfn* f, const wc_config* cfg,
                              char** out);

/* --- verification reports ------------------------------------------------ */

/* Newline-separated list of accepted verify ids (free with wc_string_free). */
wc_status wc_verify_ids(char** out);

/* Run one check by id on 1..3 sequences (inputs beyond the first default to
 * the first). severity: 0 consistent, 1 indeterminate, 2 violation found. */
wc_status wc_verify_json(const char* id, const wc_sequence* const* inputs,
                         size_t n_inputs, const wc_config* cfg, char** out,
                         int* severity);

/* Run the whole registry on one sequence. */
wc_status wc_verify_all_json(const wc_sequence* s, const char* family_label,
                             const wc_config* cfg, char** out, int* severity);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WEIGHTCALC_H */
