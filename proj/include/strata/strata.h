/*
 * strata — exact verification workbench for stratified varieties of
 * complexes, equivariant strata and truncated DGLA structures.
 *
 * C API: every payload is a JSON string (UTF-8, NUL-terminated).  Output
 * strings are allocated by the library and released with strata_free.
 * A context carries options and the last error message; contexts are not
 * thread-safe, use one per thread.
 */
#ifndef STRATA_H
#define STRATA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct strata_ctx strata_ctx;

typedef enum strata_status {
    STRATA_OK = 0,
    STRATA_ERR_INVALID = 1, /* validation or precondition failure */
    STRATA_ERR_PARSE = 2,   /* malformed JSON, literal or spec */
    STRATA_ERR_LIMIT = 3,   /* enumeration cap exceeded */
    STRATA_ERR_INTERNAL = 4
} strata_status;

strata_ctx *strata_ctx_new(void);
void strata_ctx_free(strata_ctx *ctx);

/* Message for the last failing call on this context ("" if none). */
const char *strata_last_error(const strata_ctx *ctx);

/* Options: "enum-cap" (default 10000000), "census-cap" (default 16777216),
 * "census-witnesses" (default 0).  Values are decimal strings. */
strata_status strata_set_option(strata_ctx *ctx, const char *key, const char *value);

/* Validate a document (complex | chain map | subcomplex witness |
 * g-map witness | dgla, autodetected).  *out is a report in every case;
 * OK = valid, ERR_INVALID = structural violations, ERR_PARSE = unreadable. */
strata_status strata_check(strata_ctx *ctx, const char *document_json, char **out);

/* Spec queries.  spec_json = {"kind": "...", "params": {...}}; kinds:
 * complexes, subcomplex, chain-map, quasi-iso, exact, g, g-hom,
 * g-grassmannian, e1, dgla, dgla0.  Vector params are integer arrays,
 * class params are {"algebra":"sl2","mult":{"k":mult}}. */
strata_status strata_dim(strata_ctx *ctx, const char *spec_json, int with_oracles, char **out);
strata_status strata_nonempty(strata_ctx *ctx, const char *spec_json, char **out);
strata_status strata_witness(strata_ctx *ctx, const char *spec_json, char **out);
strata_status strata_components(strata_ctx *ctx, const char *spec_json, char **out);

/* Exhaustive point count over GF(q), q in {2,3,5,7}. */
strata_status strata_census(strata_ctx *ctx, const char *spec_json, int q, char **out);

/* Formula-vs-oracle report for a suite: complexes, subcomplex, chain-map,
 * quasi-iso, g, dgla, all.  Mismatches are recorded, never an error. */
strata_status strata_compare(strata_ctx *ctx, const char *suite, unsigned long long seed,
                             char **out);

void strata_free(char *text);
const char *strata_version(void);

#ifdef __cplusplus
}
#endif

#endif
