/* monkey: word-frequency power laws for the monkey-at-the-typewriter model.
 *
 * C interface to the core library. Objects are opaque handles created and
 * destroyed through these functions; every fallible call returns a
 * monkey_status, and monkey_last_error() describes the most recent failure
 * on the calling thread. Handles are immutable once created and may be
 * shared across threads freely.
 */
#ifndef MONKEY_MONKEY_H
#define MONKEY_MONKEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MONKEY_API __declspec(dllexport)
#else
#define MONKEY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum monkey_status {
  MONKEY_OK = 0,
  MONKEY_ERR_INVALID_ARGUMENT = 1, /* precondition violated by the caller */
  MONKEY_ERR_RESOURCE = 2,         /* a configured limit would be exceeded */
  MONKEY_ERR_INVARIANT = 3,        /* a proven inequality failed: a bug */
  MONKEY_ERR_INTERNAL = 4
} monkey_status;

typedef enum monkey_dist_kind {
  MONKEY_DIST_UNIFORM = 0,
  MONKEY_DIST_BETA32 = 1, /* Beta(3,2), exact order-statistic sampling */
  MONKEY_DIST_TABLE = 2   /* monotone quantile table on [0,1] */
} monkey_dist_kind;

typedef enum monkey_figure_kind {
  MONKEY_FIGURE_EQUAL = 0,
  MONKEY_FIGURE_UNIFORM = 1,
  MONKEY_FIGURE_BETA32 = 2
} monkey_figure_kind;

typedef struct monkey_spacings monkey_spacings;
typedef struct monkey_keyboard monkey_keyboard;
typedef struct monkey_ranked monkey_ranked;
typedef struct monkey_series monkey_series;

MONKEY_API const char* monkey_version(void);

/* Message for the most recent error on this thread; empty string if none. */
MONKEY_API const char* monkey_last_error(void);

/* ---- spacings: random division of the unit interval ---- */

/* Draws k-1 variates from the distribution and returns the k spacings.
 * grid_prob/grid_value (length grid_len) are required only for
 * MONKEY_DIST_TABLE and describe a strictly increasing quantile grid with
 * endpoints (0,0) and (1,1); pass NULL/0 otherwise. Deterministic in
 * (kind, grid, k, seed). */
MONKEY_API monkey_status monkey_spacings_sample(
    monkey_dist_kind kind, const double* grid_prob, const double* grid_value,
    size_t grid_len, size_t k, uint64_t seed, monkey_spacings** out);
MONKEY_API void monkey_spacings_free(monkey_spacings* s);
MONKEY_API size_t monkey_spacings_count(const monkey_spacings* s);
/* Positional order. cap must be at least monkey_spacings_count(). */
MONKEY_API monkey_status monkey_spacings_values(const monkey_spacings* s,
                                                double* out, size_t cap);
/* Non-increasing order. */
MONKEY_API monkey_status monkey_spacings_sorted(const monkey_spacings* s,
                                                double* out, size_t cap);

/* ---- keyboards ---- */

/* Probabilities are sorted non-increasing and renormalized so that the
 * letter mass is exactly 1 - s. */
MONKEY_API monkey_status monkey_keyboard_create(const double* q, size_t k,
                                                double s,
                                                monkey_keyboard** out);
/* All k letters share probability (1-s)/k. */
MONKEY_API monkey_status monkey_keyboard_miller(size_t k, double s,
                                                monkey_keyboard** out);
/* q_i = c * D_{i:K} over the sorted spacings, s = 1 - c. */
MONKEY_API monkey_status monkey_keyboard_from_spacings(
    const monkey_spacings* sample, double c, monkey_keyboard** out);
MONKEY_API void monkey_keyboard_free(monkey_keyboard* kb);
MONKEY_API size_t monkey_keyboard_size(const monkey_keyboard* kb);
MONKEY_API double monkey_keyboard_space_prob(const monkey_keyboard* kb);
MONKEY_API monkey_status monkey_keyboard_letter_probs(
    const monkey_keyboard* kb, double* out, size_t cap);
/* Exponents a_i with q_i = q1^{a_i}; a_1 = 1 exactly, non-decreasing. */
MONKEY_API monkey_status monkey_keyboard_alphas(const monkey_keyboard* kb,
                                                double* out, size_t cap);

/* ---- exponent: the characteristic root and bound constants ---- */

typedef struct monkey_exponent_report {
  double r0;       /* unique root > 1 of sum_i R0^{-a_i} = 1 */
  double beta;     /* power-law exponent magnitude, strictly > 1 */
  double u;        /* 1/beta, the root of sum_i q_i^u = 1 on (0,1) */
  double b;        /* counting lower-bound constant, 0 < b < 1 */
  double c1;       /* b / R0 */
  double c2;       /* R0 / (R0 - 1) */
  double residual; /* sum_i q_i^u - 1 at the solved root */
} monkey_exponent_report;

MONKEY_API monkey_status monkey_solve_root(const monkey_keyboard* kb,
                                           monkey_exponent_report* out);
/* Closed form log(1-s)/log k - 1 for the equal-probability keyboard;
 * the result is -beta. */
MONKEY_API monkey_status monkey_miller_exponent(size_t k, double s,
                                                double* out_minus_beta);
/* Limit of b_{i+1} = b_i * sum_{a_j <= i} r0^{-a_j}, b_1 = 1/r0; reaches its
 * fixed point after finitely many steps and is evaluated exactly. */
MONKEY_API monkey_status monkey_compute_b(double r0, const double* alphas,
                                          size_t k, double* out_b);

/* ---- ranked enumeration ---- */

/* The n largest base values in rank order (log base descending, near-ties
 * broken by dictionary order on letter indices). Rank 1 is the null word.
 * max_frontier_or_zero bounds the best-first frontier; 0 means the default
 * of 2^27 entries. */
MONKEY_API monkey_status monkey_top_n(const monkey_keyboard* kb, uint64_t n,
                                      uint64_t max_frontier_or_zero,
                                      monkey_ranked** out);
/* Exhaustive oracle over words of length <= max_len; same order. */
MONKEY_API monkey_status monkey_brute_force_top_n(const monkey_keyboard* kb,
                                                  uint64_t n,
                                                  uint32_t max_len,
                                                  monkey_ranked** out);
MONKEY_API void monkey_ranked_free(monkey_ranked* r);
MONKEY_API uint64_t monkey_ranked_count(const monkey_ranked* r);
/* rank is 1-based throughout. */
MONKEY_API double monkey_ranked_log_base(const monkey_ranked* r,
                                         uint64_t rank);
MONKEY_API uint32_t monkey_ranked_word_length(const monkey_ranked* r,
                                              uint64_t rank);
/* Letter indices of the word at this rank, 1-based, into out[0..cap). */
MONKEY_API monkey_status monkey_ranked_word(const monkey_ranked* r,
                                            uint64_t rank, uint32_t* out,
                                            size_t cap);

/* ---- counting functions and bound checks ---- */

typedef struct monkey_count_report {
  double t;
  uint64_t n;     /* words with radix-q1 log base in (t-1, t] */
  uint64_t n_cum; /* words with radix-q1 log base <= t */
} monkey_count_report;

/* Exact counts by pruned enumeration. t_cap_or_zero <= 0 selects the
 * default cap of 30. */
MONKEY_API monkey_status monkey_count_words(const monkey_keyboard* kb,
                                            double t, double t_cap_or_zero,
                                            monkey_count_report* out);

typedef struct monkey_bound_row {
  double t;
  uint64_t n;
  uint64_t n_cum;
  double lower; /* b * R0^t */
  double upper; /* R0^t */
  int ok;
} monkey_bound_row;

/* Checks b*R0^t < N(t) <= R0^t on every threshold. rows must hold n_ts
 * entries. *all_ok is 1 when every row passes. */
MONKEY_API monkey_status monkey_verify_csiszar(const monkey_keyboard* kb,
                                               const double* ts, size_t n_ts,
                                               double t_cap_or_zero,
                                               monkey_bound_row* rows,
                                               int* all_ok);

typedef struct monkey_rank_bound_row {
  uint64_t rank;
  double log_base;
  double lower; /* C1 * B_r^{-1/beta} */
  double upper; /* C2 * B_r^{-1/beta} */
  int ok;
} monkey_rank_bound_row;

/* Checks C1*B_r^{-1/beta} < r < C2*B_r^{-1/beta} for every entry of a
 * ranked enumeration of this keyboard. rows must hold
 * monkey_ranked_count(ranked) entries. */
MONKEY_API monkey_status monkey_verify_rank_bounds(
    const monkey_keyboard* kb, const monkey_ranked* ranked,
    monkey_rank_bound_row* rows, int* all_ok);

/* ---- spacing statistics and convergence ---- */

typedef struct monkey_shao_hahn_report {
  size_t k;
  double statistic;     /* (1/K) sum log(K D_i) */
  double radix_k_mean;  /* (1/K) sum log_K D_i */
  double entropy_limit; /* theoretical limit; NaN for table distributions */
  double mu_bar;        /* (1/K) sum log_K(c D_i); NaN unless c supplied */
} monkey_shao_hahn_report;

/* letter_mass_or_zero in (0,1) also fills mu_bar; pass 0 to skip it. */
MONKEY_API monkey_status monkey_shao_hahn(const monkey_spacings* sample,
                                          double letter_mass_or_zero,
                                          monkey_shao_hahn_report* out);

/* Mean radix-K log letter probability. */
MONKEY_API monkey_status monkey_mu_bar(const monkey_keyboard* kb,
                                       double* out);

typedef struct monkey_prop1_report {
  double mu_bar;
  double minus_beta;
  int holds; /* mu_bar <= -beta within 1e-12 and ratio >= 1 - 1e-12 */
  double ratio;
} monkey_prop1_report;

MONKEY_API monkey_status monkey_verify_prop1(const monkey_keyboard* kb,
                                             monkey_prop1_report* out);

/* ---- log-log series, slope fits, sweeps ---- */

/* Builds the keyboard for one reference panel, ranks the top n base values
 * and returns the (rank, log rank, log base) series. seed is ignored for
 * the equal-probability panel. */
MONKEY_API monkey_status monkey_figure_series(monkey_figure_kind kind,
                                              size_t k, double c, uint64_t n,
                                              uint64_t seed,
                                              monkey_series** out);
MONKEY_API void monkey_series_free(monkey_series* s);
MONKEY_API uint64_t monkey_series_count(const monkey_series* s);
MONKEY_API monkey_status monkey_series_row(const monkey_series* s, uint64_t i,
                                           uint64_t* rank, double* log_rank,
                                           double* log_base);
/* Ordinary least squares of log base on log rank over ranks >= min_rank. */
MONKEY_API monkey_status monkey_fit_loglog(const monkey_series* s,
                                           uint64_t min_rank, double* slope,
                                           double* intercept,
                                           double* r_squared);

typedef struct monkey_sweep_row {
  size_t k;
  uint64_t seed;
  double beta;
  double mu_bar;
  double abs_err; /* |beta - 1| */
} monkey_sweep_row;

/* One cell per (k, seed): sample spacings, solve the exponent, record beta
 * and mu_bar. rows must hold n_ks * seeds_per_k entries, ordered by
 * (k, seed); medians (when non-NULL) receives the per-K median |beta - 1|
 * (n_ks entries). Cell seeds are base_seed .. base_seed + seeds_per_k - 1.
 * The grid arguments mirror monkey_spacings_sample and are only consulted
 * for MONKEY_DIST_TABLE. */
MONKEY_API monkey_status monkey_convergence_sweep(
    monkey_dist_kind kind, const double* grid_prob, const double* grid_value,
    size_t grid_len, const size_t* ks, size_t n_ks, uint32_t seeds_per_k,
    double c, uint64_t base_seed, monkey_sweep_row* rows, double* medians);

/* ---- serialization (17 significant digits, round-trip safe) ---- */

/* Each writer fills buf (NUL-terminated) when cap suffices and always
 * stores the required size, terminator included, in *needed. Call with a
 * NULL buf to query the size. */
MONKEY_API monkey_status monkey_keyboard_to_json(const monkey_keyboard* kb,
                                                 char* buf, size_t cap,
                                                 size_t* needed);
MONKEY_API monkey_status monkey_spacings_to_json(const monkey_spacings* s,
                                                 char* buf, size_t cap,
                                                 size_t* needed);
MONKEY_API monkey_status monkey_exponent_report_to_json(
    const monkey_exponent_report* report, char* buf, size_t cap,
    size_t* needed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MONKEY_MONKEY_H */
