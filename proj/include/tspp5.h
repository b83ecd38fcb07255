/*
 * tspp5 — exact q-series arithmetic and congruence verification for the
 * 1-shell totally symmetric plane partition counting function s(n) modulo
 * powers of 5.
 *
 * Every object is an opaque handle created by a tspp5_* constructor and
 * released by the matching *_free. Functions return TSPP5_OK (0) on success
 * or a nonzero status; tspp5_last_error() describes the most recent failure
 * on the calling thread. Strings returned through char** out-parameters are
 * heap-allocated decimal/JSON text owned by the caller; release them with
 * tspp5_string_free.
 */

#ifndef TSPP5_H
#define TSPP5_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tspp5_status {
    TSPP5_OK = 0,
    TSPP5_EUSAGE = 1,        /* bad argument, null handle, unknown name */
    TSPP5_EPRECISION = 2,    /* coefficient beyond the tracked window */
    TSPP5_ENONUNIT = 3,      /* inversion needs a +-1 leading coefficient */
    TSPP5_ERESIDUAL = 4,     /* X-basis decomposition left a residual */
    TSPP5_EMISSINGROWS = 5,  /* matrix/sequence rows not materialized */
    TSPP5_ENONINTEGRAL = 6,  /* inexact division in a Newton step */
    TSPP5_EIDENTITY = 7,     /* two closed forms of one series disagree */
    TSPP5_EBUDGET = 8,       /* precision budget exceeded */
    TSPP5_ENOMEM = 9,
    TSPP5_EINTERNAL = 10
} tspp5_status;

typedef struct tspp5_series tspp5_series; /* truncated Laurent series */
typedef struct tspp5_table tspp5_table;   /* s(n) / g(n) value table */
typedef struct tspp5_matrix tspp5_matrix; /* sparse coefficient matrix */
typedef struct tspp5_dseq tspp5_dseq;     /* d_alpha coefficient sequence */
typedef struct tspp5_report tspp5_report; /* verification report */

const char* tspp5_version(void);
const char* tspp5_status_name(int status);
const char* tspp5_last_error(void); /* thread-local; empty when no failure */
void tspp5_string_free(char* s);

/* ---- series ----------------------------------------------------------- */

/* name: "xi", "X", "g", "phi-neg", "M1", "M2", or "E" for the Euler product */
int tspp5_series_named(const char* name, long prec, tspp5_series** out);
int tspp5_series_add(const tspp5_series* f, const tspp5_series* g, tspp5_series** out);
int tspp5_series_mul(const tspp5_series* f, const tspp5_series* g, tspp5_series** out);
int tspp5_series_invert(const tspp5_series* f, tspp5_series** out);
int tspp5_series_pow(const tspp5_series* f, long k, tspp5_series** out);
int tspp5_series_scale(const tspp5_series* f, long t, tspp5_series** out);
int tspp5_series_extract(const tspp5_series* f, long r, long m, tspp5_series** out);
int tspp5_series_reduce_mod(const tspp5_series* f, const char* modulus, tspp5_series** out);
long tspp5_series_min_exp(const tspp5_series* f);
long tspp5_series_prec(const tspp5_series* f);
int tspp5_series_coeff(const tspp5_series* f, long n, char** decimal_out);
int tspp5_series_json(const tspp5_series* f, char** json_out);
void tspp5_series_free(tspp5_series* f);

/* ---- counting tables --------------------------------------------------- */

/* kind 's' or 'g'; modulus NULL for exact values, else a decimal string */
int tspp5_table_compute(char kind, long up_to, const char* modulus, tspp5_table** out);
long tspp5_table_up_to(const tspp5_table* t);
int tspp5_table_value(const tspp5_table* t, long n, char** decimal_out);
void tspp5_table_free(tspp5_table* t);

/* ---- matrices ----------------------------------------------------------- */

/* kind 'a' or 'b' */
int tspp5_matrix_appendix(char kind, tspp5_matrix** out);
/* base rows recomputed from U-images, then recurrence-extended to `rows` */
int tspp5_matrix_compute(char kind, long rows, long prec, tspp5_matrix** out);
int tspp5_matrix_product_t(const tspp5_matrix* a, const tspp5_matrix* b, long i_max,
                           tspp5_matrix** out);
long tspp5_matrix_rows(const tspp5_matrix* m);
int tspp5_matrix_entry(const tspp5_matrix* m, long i, long j, char** decimal_out);
int tspp5_matrix_json(const tspp5_matrix* m, char** json_out);
void tspp5_matrix_free(tspp5_matrix* m);

/* ---- d sequences -------------------------------------------------------- */

/* via_t nonzero routes odd steps through the T matrix (alpha must be odd) */
int tspp5_dseq_compute(long alpha, int via_t, tspp5_dseq** out);
long tspp5_dseq_alpha(const tspp5_dseq* d);
long tspp5_dseq_max_support(const tspp5_dseq* d);
int tspp5_dseq_entry(const tspp5_dseq* d, long j, char** decimal_out);
int tspp5_dseq_json(const tspp5_dseq* d, char** json_out);
void tspp5_dseq_free(tspp5_dseq* d);

/* ---- verification ------------------------------------------------------- */

int tspp5_verify_fg(long up_to, tspp5_report** out);
int tspp5_verify_s_vanishing(long up_to, tspp5_report** out);
int tspp5_verify_appendix(long prec, tspp5_report** out);
int tspp5_verify_sigmas(long prec, tspp5_report** out);
int tspp5_verify_recurrence(long i_lo, long i_hi, long prec, tspp5_report** out);
int tspp5_verify_paper_d(tspp5_report** out);
int tspp5_verify_thd(long alpha, long prec, tspp5_report** out);
int tspp5_verify_thgd(long alpha, long prec, tspp5_report** out);
/* which: 'a', 'b', 't', or 'd'; for 'd' the sweep covers d1, d3, d5 and
 * j_max 0 means each sequence's own support */
int tspp5_verify_bounds(char which, long i_max, long j_max, tspp5_report** out);
/* target 's' or 'g'; claim: target(stride*n+offset) == 0 mod 5^modulus_exp */
int tspp5_verify_claim(char target, int modulus_exp, long stride, long offset,
                       long n_max, tspp5_report** out);
int tspp5_verify_main_reduction(int alpha, long n_max, tspp5_report** out);
int tspp5_verify_phi_lemmas(long prec, tspp5_report** out);
int tspp5_verify_x_phi_mod5(long prec, tspp5_report** out);
int tspp5_verify_phi_progressions(long prec, tspp5_report** out);
int tspp5_verify_family125(long n_max, tspp5_report** out);
int tspp5_verify_family625(long n_max, tspp5_report** out);

int tspp5_report_passed(const tspp5_report* r); /* 1 pass, 0 fail */
long tspp5_report_elapsed_ms(const tspp5_report* r);
int tspp5_report_name(const tspp5_report* r, char** out);
int tspp5_report_json(const tspp5_report* r, char** json_out);
int tspp5_report_summary(const tspp5_report* r, char** out);
void tspp5_report_free(tspp5_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TSPP5_H */
