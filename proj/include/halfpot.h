/*
 * halfpot - exact chain of conjugate harmonic and monogenic potentials in the
 * upper half-spaces R^3_+ and R^4_+, with symbolic and numeric verification.
 *
 * C API: opaque handles, status codes, malloc'ed string outputs.  Every
 * string returned through a char** must be released with hp_string_free().
 * All functions are thread-safe; hp_last_error() is thread-local.
 */

#ifndef HALFPOT_H
#define HALFPOT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hp_chain hp_chain;

typedef enum hp_status {
    HP_OK = 0,
    HP_ERROR_INVALID_ARGUMENT = 1,
    HP_ERROR_CONSISTENCY = 2, /* internal cross-checks of the construction failed */
    HP_ERROR_EVAL = 3,        /* numeric evaluation left the representable range */
    HP_ERROR_INTERNAL = 4
} hp_status;

/* Library version string, e.g. "1.0.0". */
const char* hp_version(void);

/* Thread-local message describing the most recent failure. */
const char* hp_last_error(void);

/*
 * Build the chain of potentials C_k = A_k/2 + e0bar B_k/2 for levels
 * from_level..to_level in the upper half-space of the given ambient
 * dimension (3 or 4).  Negative levels are the downstream kernels, level 0
 * the logarithmic pivot, positive levels the upstream primitives.
 */
hp_status hp_chain_build(int ambient_dim, int from_level, int to_level,
                         hp_chain** out);
void hp_chain_free(hp_chain* chain);

int hp_chain_ambient_dim(const hp_chain* chain);
int hp_chain_from(const hp_chain* chain);
int hp_chain_to(const hp_chain* chain);

/* Full chain dump.  format is "json", "latex" or "text". */
hp_status hp_chain_render(const hp_chain* chain, const char* format, char** out);

/* Formula tables only (the closed-form rows and 2pi A_j lines). */
hp_status hp_chain_formulas(const hp_chain* chain, const char* format, char** out);

/* Boundary value catalogue a_j / b_j with fundamental-solution labels. */
hp_status hp_chain_boundary(const hp_chain* chain, const char* format, char** out);

/*
 * Run the verification suites.  The symbolic suite checks every chain
 * identity exactly; with include_numeric nonzero the finite-difference and
 * quadrature cross-checks run as well.  *all_pass is set to 1 iff every
 * report item passed; the JSON report is returned through report_json when
 * non-NULL.
 */
hp_status hp_chain_verify(const hp_chain* chain, int include_numeric,
                          int* all_pass, char** report_json);

void hp_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HALFPOT_H */
