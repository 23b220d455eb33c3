/* C interface to the mzvreg library.
 *
 * Every call returns an mzvreg_status. On failure a message is readable
 * through mzvreg_last_error on the same thread until that thread's next call.
 * Strings handed out through char** parameters are owned by the caller and
 * must be released with mzvreg_string_free.
 *
 * A context may be shared by several threads for eval, reg, verify and
 * partitions; the zeta value cache inside it is synchronized.
 */
#ifndef MZVREG_H
#define MZVREG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mzvreg_status {
    MZVREG_OK = 0,
    MZVREG_ERR_DOMAIN = 1,   /* argument outside the domain (e.g. non-admissible index) */
    MZVREG_ERR_CAPACITY = 2, /* configured size bound exceeded */
    MZVREG_ERR_ACCURACY = 3, /* tolerance unreachable with the configuration */
    MZVREG_ERR_PARSE = 4,    /* malformed text input */
    MZVREG_ERR_ARGUMENT = 5, /* null pointer or invalid configuration */
    MZVREG_ERR_INTERNAL = 6
} mzvreg_status;

typedef struct mzvreg_config {
    long prec_bits;         /* working precision in bits (default 128) */
    long trunc;             /* truncation cap N (default 100000) */
    int tail_order;         /* tail expansion order (default 8) */
    int series_order;       /* order of rho-type series; -1 picks the degree */
    double tolerance;       /* accepted error bound (default 1e-9) */
    int jobs;               /* worker threads for the suite (default 1) */
    int max_perm_depth;     /* symmetric sums: largest depth (default 5) */
    int max_partition_size; /* partition sums: largest r (default 8) */
} mzvreg_config;

typedef struct mzvreg_context mzvreg_context;

void mzvreg_config_default(mzvreg_config* cfg);
const char* mzvreg_version(void);

/* cfg may be NULL for the defaults. */
mzvreg_status mzvreg_context_create(const mzvreg_config* cfg, mzvreg_context** out);
void mzvreg_context_destroy(mzvreg_context* ctx);
const char* mzvreg_last_error(const mzvreg_context* ctx);
void mzvreg_string_free(char* s);

/* One line "prec_bits=... trunc=... tail_order=... series_order=... tolerance=... jobs=...". */
mzvreg_status mzvreg_describe_config(mzvreg_context* ctx, char** out);

/* kind: "mzv", "mzsv" or "zeta"; index "k1,...,kr" (for zeta a single integer).
 * JSON {"kind","index","value","bound","elapsed"}. */
mzvreg_status mzvreg_eval(mzvreg_context* ctx, const char* kind, const char* index, char** out_json);

/* flavor: "harm", "star-harm", "shuffle", "star-sh"; route "direct" or "rho"
 * (used by shuffle only; NULL means direct).
 * JSON {"flavor","index","symbolic","coefficients":[..],"numeric":[{value,bound}..]}. */
mzvreg_status mzvreg_reg(mzvreg_context* ctx, const char* flavor, const char* index, const char* route,
                         char** out_json);

/* params_json as accepted by the identity (e.g. {"index":"1,2"} or {"r":5}).
 * *passed is 1 when the identity holds. out_text may be NULL. */
mzvreg_status mzvreg_verify(mzvreg_context* ctx, const char* name, const char* params_json, char** out_json,
                            char** out_text, int* passed);

/* ks, ls: comma separated integers. out_json is a JSON array of reports. */
mzvreg_status mzvreg_example1_table(mzvreg_context* ctx, const char* ks, const char* ls, char** out_json,
                                    char** out_text, int* all_passed);

/* Partitions of a comma separated set; restrict_to (may be NULL) keeps only
 * partitions with no block inside that set.
 * JSON {"set","restrict","count","partitions":[{"blocks","text","c","c_star"}..]}. */
mzvreg_status mzvreg_partitions(mzvreg_context* ctx, const char* set, const char* restrict_to, char** out_json);

/* Bell polynomial data for r (and k when k > 0): the polynomial in x1..xr,
 * Bell(r), Stirling numbers. JSON object. */
mzvreg_status mzvreg_bell(mzvreg_context* ctx, int r, int k, char** out_json);

/* Full acceptance matrix. out_json: {"passed","failed","reports":[..]}. */
mzvreg_status mzvreg_suite(mzvreg_context* ctx, char** out_json, char** out_text, int* passed, int* failed);

/* Warm-start and persist the zeta value cache. */
mzvreg_status mzvreg_cache_load(mzvreg_context* ctx, const char* path, size_t* loaded);
mzvreg_status mzvreg_cache_save(mzvreg_context* ctx, const char* path);

/* Names accepted by mzvreg_verify, newline separated. */
mzvreg_status mzvreg_identity_names(mzvreg_context* ctx, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MZVREG_H */
