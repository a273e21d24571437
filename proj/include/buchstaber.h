/* C interface to the real Buchstaber invariant library.
 *
 * All computations run through an opaque engine handle that owns the memo
 * tables, the solver budget/flags and the result cache. Functions return
 * BV_OK (0) on success and a nonzero error code otherwise; outputs are
 * written through pointers, which may be NULL when the caller does not
 * need them. Strings returned through char** must be released with
 * bv_string_free, certificate buffers with bv_buffer_free.
 */
#ifndef BUCHSTABER_H
#define BUCHSTABER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BV_OK 0
#define BV_EINVAL 1    /* invalid arguments or dimension errors */
#define BV_EPARSE 2    /* malformed matrix or cache text */
#define BV_EBUDGET 3   /* node budget exhausted, result is a bound only */
#define BV_EIO 4       /* file system failure */
#define BV_EINTERNAL 5 /* internal invariant violated */

typedef struct bv_engine bv_engine;

typedef struct bv_interval {
    int64_t lo;
    int64_t hi;
    int exact;
} bv_interval;

const char* bv_version(void);

bv_engine* bv_engine_new(void);
void bv_engine_free(bv_engine* e);

int bv_set_node_budget(bv_engine* e, int64_t budget);
/* oracle mode disables parity/symmetry pruning and warm starts */
int bv_set_flags(bv_engine* e, int oracle_mode, int use_parity, int use_symmetry);

/* Certified bounds for m_k(b); provenance is "lo-tags;hi-tags". cert (when
 * non-NULL) receives the lattice point witnessing lo, length 2^k-1. */
int bv_mk_bounds(bv_engine* e, int k, int64_t b, bv_interval* out, char** provenance,
                 int64_t** cert, int32_t* cert_len);

/* Exact branch-and-bound for m_k(b). Returns BV_EBUDGET when the node budget
 * ran out (value is then the best certified lower bound). The certificate is
 * the multiplicity vector in canonical order, length 2^k-1. */
int bv_mk_solve(bv_engine* e, int k, int64_t b, int64_t* value, int* exact, int64_t* nodes,
                int64_t** cert, int32_t* cert_len);

/* s_R(m,p) from certified bounds only (no search). */
int bv_srm_bounds(bv_engine* e, int64_t m, int64_t p, bv_interval* out, char** provenance);

/* s_R(m,p) with exact m_k(p-1) solves; matrix_text receives a realizing
 * matrix in the "k m p" text format when one is available ("" otherwise). */
int bv_srm_solve(bv_engine* e, int64_t m, int64_t p, bv_interval* out, char** provenance,
                 char** matrix_text);

/* Parse a matrix file ("k m p" header) and test whether every p columns span.
 * realized receives 1/0; when 0, witness_u / witness_count identify a
 * hyperplane holding more than p-1 columns. */
int bv_verify_matrix_text(const char* text, int* realized, uint32_t* witness_u,
                          int64_t* witness_count, int* k, int* m, int* p);

/* Recompute the bundled reference tables. Report lines are
 * "MATCH|REFINE|MISMATCH <cell>: <detail>". Exit contract: mismatches == 0
 * means the artifact is consistent with the published values. */
int bv_check_tables(bv_engine* e, int bounds_only, int qmax, int64_t mmax, int64_t pmax,
                    int include_mk, int include_srm, char** report, int* matches,
                    int* refines, int* mismatches);

/* Check m_k(b + 2^{k-1}-1) = m_k(b) + 2^k-1 for all b <= b_max. */
int bv_scan_periodicity(bv_engine* e, int k, int64_t b_max, char** report, int* violations,
                        int* skipped);

int bv_cache_load(bv_engine* e, const char* path, int* loaded, int* dropped);
int bv_cache_store(bv_engine* e, const char* path);

void bv_string_free(char* s);
void bv_buffer_free(int64_t* buf);

#ifdef __cplusplus
}
#endif

#endif /* BUCHSTABER_H */
