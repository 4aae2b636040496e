#ifndef HTILE_H
#define HTILE_H

/* C interface to the tiling library: opaque handles, integer status codes,
 * malloc'd strings released through htile_string_free. All functions are
 * deterministic; no global state beyond the per-thread last-error text. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct htile_complex htile_complex;   /* relative simplicial complex */
typedef struct htile_tiling htile_tiling;     /* ordered tiling with its target */
typedef struct htile_shelling htile_shelling; /* shelling result with log and stats */

typedef enum htile_status {
    HTILE_OK = 0,
    HTILE_ERR_INVALID_ARGUMENT = 1,
    HTILE_ERR_PARSE = 2,
    HTILE_ERR_UNKNOWN_FACE = 3,
    HTILE_ERR_DEGENERATE = 4,
    HTILE_ERR_NOT_PSEUDOMANIFOLD = 5,
    HTILE_ERR_GUARDRAIL = 6,
    HTILE_ERR_NOTHING_TO_DO = 7,
    HTILE_ERR_IO = 8,
    HTILE_ERR_INTERNAL = 9
} htile_status;

/* Message for the most recent failure on this thread. Borrowed pointer. */
const char* htile_last_error(void);

void htile_string_free(char* s);

/* ---- complexes ---------------------------------------------------- */

/* Facets as a flat vertex array with per-facet lengths; removed facets may
 * be NULL/0. */
htile_status htile_complex_create(const int* facet_vertices, const size_t* facet_lengths,
                                  size_t facet_count, const int* removed_vertices,
                                  const size_t* removed_lengths, size_t removed_count,
                                  htile_complex** out);

/* name: simplex | boundary | wedge_two_simplices | disjoint_simplices
 * (count used by disjoint_simplices only). */
htile_status htile_complex_generate(const char* name, int n, int count, htile_complex** out);
htile_status htile_complex_cone(const htile_complex* base, htile_complex** out);
htile_status htile_complex_join(const htile_complex* a, const htile_complex* b,
                                htile_complex** out);

htile_status htile_complex_read(const char* path, htile_complex** out);
htile_status htile_complex_write(const htile_complex* c, const char* path);
htile_status htile_complex_to_string(const htile_complex* c, char** out);

void htile_complex_free(htile_complex* c);

int htile_complex_dimension(const htile_complex* c);
size_t htile_complex_facet_count(const htile_complex* c);
htile_status htile_complex_f_vector(const htile_complex* c, long long* out, size_t capacity,
                                    size_t* length);
htile_status htile_complex_euler(const htile_complex* c, long long* out);
htile_status htile_complex_predicates(const htile_complex* c, int* is_pure,
                                      int* is_strongly_connected, int* is_closed_pseudomanifold);
htile_status htile_complex_equal(const htile_complex* a, const htile_complex* b, int* out);

htile_status htile_complex_stellar_subdivide(const htile_complex* c, const int* face,
                                             size_t face_length, htile_complex** out, int* apex);
htile_status htile_complex_barycentric_subdivide(const htile_complex* c, htile_complex** out);

/* ---- tilings ------------------------------------------------------ */

htile_status htile_tiling_read(const char* path, htile_tiling** out);
htile_status htile_tiling_write(const htile_tiling* t, const char* path, const char* target_ref);
void htile_tiling_free(htile_tiling* t);

size_t htile_tiling_tile_count(const htile_tiling* t);
/* Canonical tile line for position i. */
htile_status htile_tiling_tile_line(const htile_tiling* t, size_t i, char** out);
htile_status htile_tiling_target(const htile_tiling* t, htile_complex** out);

/* ok=1 when the (shelling) validation passes; report is the text block. */
htile_status htile_tiling_validate(const htile_tiling* t, int check_shelling, int verbose,
                                   int* ok, char** report);

htile_status htile_tiling_subdivide(const htile_tiling* t, const int* face, size_t face_length,
                                    htile_tiling** out);

/* h/c/f vectors with identity checks; manifold=1 additionally runs the
 * palindromic and weighted-sum checks. all_ok=1 when every applicable check
 * passed. */
htile_status htile_tiling_vectors_report(const htile_tiling* t, int manifold, int* all_ok,
                                         char** report);

/* ---- shellings ---------------------------------------------------- */

/* mode: barycentric | facets | ridges | mixed */
htile_status htile_shell(const htile_complex* c, const char* mode, htile_shelling** out);
htile_status htile_shell_pseudomanifold(const htile_complex* c, const char* mode,
                                        htile_shelling** out);

htile_status htile_shelling_tiling(const htile_shelling* r, htile_tiling** out);
htile_status htile_shelling_stats(const htile_shelling* r, char** out);
htile_status htile_shelling_log(const htile_shelling* r, char** out);
size_t htile_shelling_subdivision_count(const htile_shelling* r);
void htile_shelling_free(htile_shelling* r);

/* ---- exhaustive oracles (guardrailed) ------------------------------ */

htile_status htile_enumerate(const htile_complex* c, size_t limit, size_t* count);
/* Additionally writes <prefix>target.cx and <prefix><i>.tiling. */
htile_status htile_enumerate_emit(const htile_complex* c, size_t limit, const char* prefix,
                                  size_t* count);
htile_status htile_min_critical(const htile_complex* c, int require_shellable, int* present,
                                long long* value);
htile_status htile_cross_check(const htile_complex* c, int* ok, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HTILE_H */
