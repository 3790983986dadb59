/*
 * C API of the lexpref library: preference-oracle construction, axiom
 * checks, classification, choice-data audits and canned demos behind
 * opaque handles and error codes. Reports come back as JSON strings owned
 * by the library; release them with lexpref_string_free().
 *
 * Every function that can fail returns a lexpref_status; on failure a
 * human-readable message is available from lexpref_last_error() until the
 * next failing call on the same thread.
 */

#ifndef LEXPREF_H
#define LEXPREF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lexpref_oracle lexpref_oracle;

typedef enum lexpref_status {
    LEXPREF_OK = 0,
    LEXPREF_ERR_INVALID_ARG = 1,  /* bad spec string, parameters or dimensions */
    LEXPREF_ERR_PARSE = 2,        /* malformed choice data or schema file */
    LEXPREF_ERR_PRECONDITION = 3, /* checker prerequisite failed (e.g. IMIA monotonicity) */
    LEXPREF_ERR_INCOMPLETE = 4,   /* oracle returned incomparable where completeness is required */
    LEXPREF_ERR_INTERNAL = 5
} lexpref_status;

typedef enum lexpref_outcome {
    LEXPREF_INDIFFERENT = 0,
    LEXPREF_FIRST_STRICT = 1,
    LEXPREF_SECOND_STRICT = 2,
    LEXPREF_INCOMPARABLE = 3
} lexpref_outcome;

/* Classification results of lexpref_classify (and the CLI exit codes). */
typedef enum lexpref_class {
    LEXPREF_CLASS_LEXICOGRAPHIC = 0,
    LEXPREF_CLASS_PAIRWISE_ONLY = 3,
    LEXPREF_CLASS_DOMINANT = 4,
    LEXPREF_CLASS_UNCLASSIFIED = 5
} lexpref_class;

/* Thread-local message describing the most recent failure. */
const char* lexpref_last_error(void);

void lexpref_string_free(char* s);

/* --- oracles ----------------------------------------------------------- */

/* Creates a built-in oracle from its spec string (see `zoo list`). */
lexpref_status lexpref_oracle_create(const char* spec, lexpref_oracle** out);
void lexpref_oracle_destroy(lexpref_oracle* oracle);

size_t lexpref_oracle_dimension(const lexpref_oracle* oracle);
const char* lexpref_oracle_name(const lexpref_oracle* oracle);

/* Compares two points of length n (= the oracle dimension). */
lexpref_status lexpref_oracle_compare(const lexpref_oracle* oracle, const double* x,
                                      const double* y, size_t n, lexpref_outcome* out);

/* Induced preference on the 1-based attributes attrs[0..count-1]. */
lexpref_status lexpref_oracle_induce(const lexpref_oracle* oracle, const size_t* attrs,
                                     size_t count, lexpref_oracle** out);

/* --- checks, classification, audits ------------------------------------ */

/*
 * Runs one axiom check and returns the verdict as JSON.
 *   axiom: monotone | mildcont | imia | noncomp2 | noncompfull | nraa |
 *          independence | completetrans (plus monotone-full / mildcont-full
 *          for the whole-preference variants)
 *   grid_spec: "n:max:h" or NULL for the default (n:8:1 for n<=3, n:4:1 above)
 *   eps_spec:  "eps0:factor:floor" with floor "h" allowed, NULL for 2:0.5:h
 * violated receives 0/1. json_out may be NULL when only the flag is needed.
 */
lexpref_status lexpref_check(const lexpref_oracle* oracle, const char* axiom,
                             const char* grid_spec, const char* eps_spec, uint64_t seed,
                             int* violated, char** json_out);

/*
 * Full classification pipeline. mode: "imia" or "nc3a".
 * class_out receives a lexpref_class value.
 */
lexpref_status lexpref_classify(const lexpref_oracle* oracle, const char* grid_spec,
                                const char* eps_spec, const char* mode, uint64_t seed,
                                int* class_out, char** json_out);

/* Audits a choice-data CSV; schema_path may be NULL (all higher-is-better). */
lexpref_status lexpref_audit_file(const char* csv_path, const char* schema_path, char** json_out);

/* name: semiorder-cycle | table1 | robustness. */
lexpref_status lexpref_demo(const char* name, char** json_out);

lexpref_status lexpref_zoo_list(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* LEXPREF_H */
