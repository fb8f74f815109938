/* C interface to the solver. All strings returned through char** outputs are
 * allocated by the library and released with smyth_string_free. Functions
 * return SMYTH_OK or an error status; smyth_last_error() then describes the
 * failure (thread-local, valid until the next call on the same thread). */
#ifndef SMYTH_SMYTH_H
#define SMYTH_SMYTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SMYTH_API __declspec(dllexport)
#else
#define SMYTH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smyth_status {
  SMYTH_OK = 0,
  SMYTH_ERR_DOMAIN = 1,      /* input outside an operation's domain */
  SMYTH_ERR_PARSE = 2,       /* malformed text or document */
  SMYTH_ERR_FEASIBILITY = 3, /* construction impossible for this input */
  SMYTH_ERR_RESOURCE = 4,    /* enumeration or size cap exceeded */
  SMYTH_ERR_INTERNAL = 5,    /* self-check failed */
  SMYTH_ERR_ARGUMENT = 6     /* null pointer or bad option */
} smyth_status;

/* Normalized coefficient vector (primitive integers). */
typedef struct smyth_coeffs smyth_coeffs;

/* Result of smyth_solve. */
typedef struct smyth_solution smyth_solution;

typedef enum smyth_solution_kind {
  SMYTH_SOLVED = 0,     /* verified witness available */
  SMYTH_UNSOLVABLE = 1, /* local conditions fail; report holds a certificate */
  SMYTH_EXHAUSTED = 2   /* solvable, but no witness within the limits */
} smyth_solution_kind;

typedef void (*smyth_log_fn)(const char* line, void* user);

typedef struct smyth_solve_options {
  const char* d0;          /* rational text, default "8" */
  const char* max_d;       /* rational text, default "512" */
  uint64_t max_points;     /* 0: SMYTH_MAX_POINTS or the built-in cap */
  int include_timings;     /* nonzero: report carries per-stage seconds */
  int compact;             /* nonzero (default): search small witnesses */
  smyth_log_fn log;        /* optional progress lines */
  void* log_user;
} smyth_solve_options;

SMYTH_API const char* smyth_version(void);
SMYTH_API const char* smyth_last_error(void);
SMYTH_API void smyth_string_free(char* s);

/* "3/2,2,5/2" -> (3,4,5). */
SMYTH_API smyth_status smyth_coeffs_parse(const char* text, smyth_coeffs** out);
SMYTH_API void smyth_coeffs_free(smyth_coeffs* c);
SMYTH_API size_t smyth_coeffs_size(const smyth_coeffs* c);
/* JSON array of the normalized integers as strings. */
SMYTH_API smyth_status smyth_coeffs_json(const smyth_coeffs* c, char** json);

/* Local conditions at every relevant place. */
SMYTH_API smyth_status smyth_decide(const smyth_coeffs* c, int* solvable, char** json);

SMYTH_API void smyth_solve_options_init(smyth_solve_options* o);
SMYTH_API smyth_status smyth_solve(const smyth_coeffs* c, const smyth_solve_options* o, smyth_solution** out);
SMYTH_API void smyth_solution_free(smyth_solution* s);
SMYTH_API smyth_solution_kind smyth_solution_kind_of(const smyth_solution* s);
SMYTH_API smyth_status smyth_solution_report_json(const smyth_solution* s, char** json);
/* SMYTH_ERR_DOMAIN when there is no witness. */
SMYTH_API smyth_status smyth_solution_witness_json(const smyth_solution* s, char** json);
SMYTH_API smyth_status smyth_solution_witness_csv(const smyth_solution* s, char** csv);

/* Checks a witness document ({"matrix": [[...]]} or a bare array of rows).
 * valid: rows satisfy the relation and columns are equal multisets.
 * json (optional): valid, trivial, failing_row, failing_column (0-based or
 * null) and a 1-based human-readable diagnostic.
 * SMYTH_ERR_PARSE for malformed text, SMYTH_ERR_DOMAIN for a column-count mismatch. */
SMYTH_API smyth_status smyth_verify_witness(const smyth_coeffs* c, const char* witness, int* valid, int* trivial,
                                            char** json);

/* Balance LP on the shell of dilation D (origin dropped). certificate is set to
 * 1 when a Gordan certificate was found, 0 when a balanced weighting exists;
 * json holds whichever was found. */
SMYTH_API smyth_status smyth_certificate(const smyth_coeffs* c, const char* dilation, uint64_t max_points,
                                         int* certificate, char** json);

/* Balance LP on every lattice point with basis coordinates in [-B, B]. */
SMYTH_API smyth_status smyth_box_oracle(const smyth_coeffs* c, long bound, uint64_t max_points, int* found,
                                        char** json);

/* SVG for n = 3. */
SMYTH_API smyth_status smyth_figure_svg(const smyth_coeffs* c, const char* dilation, char** svg);

/* Shell points as CSV (c1..c_{n-1}, L1..Ln). */
SMYTH_API smyth_status smyth_shell_csv(const smyth_coeffs* c, const char* dilation, uint64_t max_points, char** csv);

/* Pushforwards of the uniform measure on (Z/p^k)^(n-1). */
SMYTH_API smyth_status smyth_local_check(const smyth_coeffs* c, const char* prime, unsigned k, int* identical,
                                         char** json);

/* Converse triangle constructions. lengths: comma-separated nonnegative
 * rationals; valuations: comma-separated integers or "inf". */
SMYTH_API smyth_status smyth_triangle_real(const char* lengths, unsigned dim, char** json);
SMYTH_API smyth_status smyth_triangle_nonarch(const char* valuations, const char* prime, unsigned dim, char** json);

#ifdef __cplusplus
}
#endif

#endif
