/*
 * qdent: entanglement dynamics of the equivalent-neighbor quantum-dot spin
 * model. Plain C interface over the C++ core.
 *
 * Conventions:
 *  - Every function returns a qdent_status. Output is written through pointer
 *    arguments only on QDENT_OK.
 *  - On failure a human-readable message for the calling thread is available
 *    from qdent_last_error() until the next failing call on that thread.
 *  - Handles are opaque, immutable after creation and may be shared between
 *    threads. Destroy functions accept NULL.
 *  - Array outputs take a capacity; QDENT_ERR_BUFFER_TOO_SMALL is returned
 *    when it is insufficient, with the required length in *required when a
 *    `required` pointer is provided.
 *  - Time is the dimensionless product kt of coupling and physical time.
 */
#ifndef QDENT_QDENT_H
#define QDENT_QDENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QDENT_BUILDING_LIBRARY)
#    define QDENT_API __declspec(dllexport)
#  else
#    define QDENT_API __declspec(dllimport)
#  endif
#else
#  define QDENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdent_status {
  QDENT_OK = 0,
  QDENT_ERR_NULL_ARGUMENT = 1,
  QDENT_ERR_DOMAIN = 2,           /* argument outside the operation's domain */
  QDENT_ERR_BUDGET = 3,           /* oracle sector larger than the budget */
  QDENT_ERR_NUMERIC = 4,          /* eigensolver or normalization failure */
  QDENT_ERR_BUFFER_TOO_SMALL = 5,
  QDENT_ERR_NO_SOLUTION = 6,      /* e.g. no single-excitation MES time for N > 6 */
  QDENT_ERR_INTERNAL = 7
} qdent_status;

/* Excitation selector for qdent_sweep_over_n: M = floor(N / 2). */
#define QDENT_EXCITED_HALF (-1)

QDENT_API const char* qdent_version(void);
QDENT_API const char* qdent_status_string(qdent_status status);
QDENT_API const char* qdent_last_error(void);

/* ---- combinatorics ------------------------------------------------------ */

/* Decimal string of C(x, y) (0 outside 0 <= y <= x). */
QDENT_API qdent_status qdent_binomial_string(int64_t x, int64_t y, char* buffer, size_t capacity,
                                             size_t* required);
/* Decimal string of x!! with (-1)!! = 0!! = 1. */
QDENT_API qdent_status qdent_double_factorial_string(int64_t x, char* buffer, size_t capacity,
                                                     size_t* required);

/* ---- closed form ------------------------------------------------------- */

typedef struct qdent_table qdent_table;

QDENT_API qdent_status qdent_table_create(int dots, int excited, qdent_table** out);
QDENT_API void qdent_table_destroy(qdent_table* table);

/* M' + 1: length of the coefficient and spectrum arrays. */
QDENT_API qdent_status qdent_table_size(const qdent_table* table, int* out);
/* Exact b[n][m] as "p/q" (or "p" when integral). */
QDENT_API qdent_status qdent_table_b_string(const qdent_table* table, int n, int m, char* buffer,
                                            size_t capacity, size_t* required);
QDENT_API qdent_status qdent_table_phase(const qdent_table* table, int n, int64_t* out);

QDENT_API qdent_status qdent_table_coefficients(const qdent_table* table, double kt, double* real,
                                                double* imag, size_t capacity);
QDENT_API qdent_status qdent_table_spectrum(const qdent_table* table, double kt, double* weights,
                                            size_t capacity);
QDENT_API qdent_status qdent_table_entropy(const qdent_table* table, double kt, double* out);

QDENT_API qdent_status qdent_entanglement(const double* weights, size_t count, double* out);
QDENT_API qdent_status qdent_mes_entropy(int dots, int excited, double* out);
QDENT_API qdent_status qdent_relative_entanglement(double entropy, int dots, int excited, double* out);

QDENT_API qdent_status qdent_p1_single_excitation(int dots, double kt, double* out);
QDENT_API qdent_status qdent_entanglement_rate_m1(int dots, double kt, double* out);
/* QDENT_ERR_NO_SOLUTION when no real MES time exists (N > 6). */
QDENT_API qdent_status qdent_mes_time_m1(int dots, double* out);
QDENT_API qdent_status qdent_peak_entropy_m1(int dots, double* out);
/* |C_m(pi)| for m = 0 .. M'; odd N and M <= (N - 1) / 2 only. */
QDENT_API qdent_status qdent_pi_time_magnitudes(int dots, int excited, double* out, size_t capacity);

/* ---- analysis ---------------------------------------------------------- */

typedef struct qdent_max_record {
  int dots;
  int excited;
  double kt_star;
  double max_entropy;   /* E_max, ebits */
  double relative_max;  /* e_max */
  double mes_entropy;   /* E_MES, ebits */
} qdent_max_record;

typedef struct qdent_search_options {
  int grid_points;    /* <= 0 selects the default 4096 */
  double refine_tol;  /* <= 0 selects the default 1e-12 */
} qdent_search_options;

QDENT_API qdent_status qdent_period(int dots, int excited, double* out);
QDENT_API qdent_status qdent_critical_n(int excited, int* out);

/* `options` may be NULL. `spectrum` (capacity M' + 1) may be NULL. */
QDENT_API qdent_status qdent_find_max(int dots, int excited, const qdent_search_options* options,
                                      qdent_max_record* out, double* spectrum, size_t capacity);
/* N - 1 records for M = 1 .. N - 1. */
QDENT_API qdent_status qdent_sweep_over_m(int dots, const qdent_search_options* options,
                                          qdent_max_record* out, size_t capacity, size_t* written);
/* One record per entry of `dots`; `excited` may be QDENT_EXCITED_HALF. */
QDENT_API qdent_status qdent_sweep_over_n(int excited, const int* dots, size_t count,
                                          const qdent_search_options* options,
                                          qdent_max_record* out, size_t capacity, size_t* written);

typedef struct qdent_fit {
  int excited;
  double slope;
  double intercept;
  double residual_rms;
} qdent_fit;

/* `inverse_max_entropy` (length `count`) may be NULL. */
QDENT_API qdent_status qdent_fit_inverse_linear(int excited, const int* dots, size_t count,
                                                const qdent_search_options* options, qdent_fit* out,
                                                double* inverse_max_entropy);

/* ---- exact-diagonalization oracle -------------------------------------- */

typedef struct qdent_oracle qdent_oracle;

/* max_dimension = 0 selects the default budget C(16, 8). */
QDENT_API qdent_status qdent_oracle_create(int dots, int excited, size_t max_dimension,
                                           qdent_oracle** out);
QDENT_API void qdent_oracle_destroy(qdent_oracle* oracle);
QDENT_API qdent_status qdent_oracle_dimension(const qdent_oracle* oracle, size_t* out);
/* Sector Hamiltonian eigenvalues in ascending order (units of kappa). */
QDENT_API qdent_status qdent_oracle_eigenvalues(const qdent_oracle* oracle, double* out,
                                                size_t capacity);
/* Entropy of the first `cut` sites after evolving the initial state to kt. */
QDENT_API qdent_status qdent_oracle_entropy(const qdent_oracle* oracle, double kt, int cut,
                                            double* out);

/* ---- verification ------------------------------------------------------ */

typedef struct qdent_verify_options {
  int max_dots;
  int samples_per_period;
  double tolerance;
  size_t max_dimension;  /* 0 selects the default */
  int corrupt_table;     /* nonzero: test hook, perturbs every b table */
} qdent_verify_options;

typedef struct qdent_mismatch {
  int dots;
  int excited;
  double kt;
  double closed_form;
  double oracle;
  double abs_diff;
} qdent_mismatch;

typedef void (*qdent_mismatch_callback)(const qdent_mismatch* mismatch, void* user_data);

typedef struct qdent_verify_summary {
  size_t checked;
  size_t mismatches;
  double max_abs_diff;
} qdent_verify_summary;

/* QDENT_OK is returned whether or not mismatches were found; inspect the
 * summary. The callback (may be NULL) is invoked once per mismatch in (N, M,
 * sample) order. */
QDENT_API qdent_status qdent_verify(const qdent_verify_options* options, qdent_mismatch_callback callback,
                                    void* user_data, qdent_verify_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* QDENT_QDENT_H */
