/* C interface to the thetavex library. All strings are UTF-8 and NUL-terminated.
 * Strings returned through `char**` are owned by the caller and released with
 * tvx_string_free. Handles are released with their *_free function. */
#ifndef THETAVEX_H
#define THETAVEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(THETAVEX_BUILDING)
#    define TVX_API __declspec(dllexport)
#  else
#    define TVX_API __declspec(dllimport)
#  endif
#else
#  define TVX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tvx_status {
  TVX_OK = 0,
  TVX_ERR_PARSE = 1,
  TVX_ERR_INVALID_TRIPLE = 2,
  TVX_ERR_INFEASIBLE_RANK = 3,
  TVX_ERR_RANK_TOO_LARGE = 4,
  TVX_ERR_OUT_OF_RANGE = 5,
  TVX_ERR_NULL_ARG = 6,
  TVX_ERR_INTERNAL = 7
} tvx_status;

typedef struct tvx_perm tvx_perm;
typedef struct tvx_triple tvx_triple;

/* Flags for tvx_classify. */
#define TVX_CLASSIFY_FULL 1u   /* run every classifier, not just the quick path */
#define TVX_OUTPUT_JSON 2u
#define TVX_OUTPUT_PRETTY 4u   /* indented JSON */
#define TVX_OUTPUT_OVERLINE 8u /* overlined negatives in text output */

/* Flags for tvx_render. */
#define TVX_RENDER_CROSSES 1u
#define TVX_RENDER_RANKS 2u

typedef struct tvx_summary {
  int n;
  uint64_t total;
  uint64_t theta_vexillary;
  uint64_t mismatches;
} tvx_summary;

/* Receives one window of length n. Return nonzero to stop. */
typedef int (*tvx_window_cb)(const int* window, size_t n, void* user);

TVX_API const char* tvx_version(void);
/* Message for the last failing call on this thread; empty if none. */
TVX_API const char* tvx_last_error(void);
TVX_API const char* tvx_status_name(tvx_status status);
TVX_API void tvx_string_free(char* s);

/* Largest rank accepted without allow_large. */
TVX_API int tvx_max_guarded_rank(void);

TVX_API tvx_status tvx_perm_parse(const char* text, tvx_perm** out);
TVX_API tvx_status tvx_perm_from_window(const int* window, size_t n, tvx_perm** out);
TVX_API void tvx_perm_free(tvx_perm* w);
TVX_API int tvx_perm_rank(const tvx_perm* w);
/* Copies the window into out[0..cap); fails with OUT_OF_RANGE if cap < rank. */
TVX_API tvx_status tvx_perm_window(const tvx_perm* w, int* out, size_t cap);
TVX_API tvx_status tvx_perm_to_string(const tvx_perm* w, int overline, char** out);
TVX_API tvx_status tvx_perm_inverse(const tvx_perm* w, tvx_perm** out);
TVX_API int tvx_perm_length(const tvx_perm* w);
TVX_API int tvx_perm_equal(const tvx_perm* a, const tvx_perm* b);

/* Accepts "k...; p...; q..." or {"k":[...],"p":[...],"q":[...],"n":N}.
 * Only the shape is checked; n = 0 leaves the rank to be inferred. */
TVX_API tvx_status tvx_triple_parse(const char* text, int n, tvx_triple** out);
TVX_API void tvx_triple_free(tvx_triple* t);
TVX_API int tvx_triple_size(const tvx_triple* t);
TVX_API tvx_status tvx_triple_to_string(const tvx_triple* t, char** out);
TVX_API tvx_status tvx_triple_to_json(const tvx_triple* t, char** out);
/* TVX_ERR_INVALID_TRIPLE names the first failed condition, e.g. "B2 fails at i=4". */
TVX_API tvx_status tvx_triple_validate(const tvx_triple* t);

/* n = 0 uses the triple's own rank, or the smallest feasible one. */
TVX_API tvx_status tvx_construct(const tvx_triple* t, int n, tvx_perm** out);
TVX_API tvx_status tvx_construct_inverse(const tvx_triple* t, int n, tvx_perm** out);
/* {"schema":"1","triple":{...},"window":[...],"inverse":[...]} for the rank
 * actually used. */
TVX_API tvx_status tvx_construction_json(const tvx_triple* t, int n, int pretty, char** out);
/* *out is NULL when w is not theta-vexillary. */
TVX_API tvx_status tvx_recover(const tvx_perm* w, tvx_triple** out);

/* Writes the verdict to *theta_vexillary and, if report != NULL, a text or
 * JSON report. */
TVX_API tvx_status tvx_classify(const tvx_perm* w, unsigned flags, int* theta_vexillary,
                                char** report);
TVX_API tvx_status tvx_render(const tvx_perm* w, unsigned flags, char** out);
TVX_API tvx_status tvx_diagram_json(const tvx_perm* w, int pretty, char** out);

/* Runs all classifiers over W_n. on_mismatch may be NULL. */
TVX_API tvx_status tvx_verify(int n, unsigned jobs, int allow_large, tvx_summary* out,
                              tvx_window_cb on_mismatch, void* user);
/* Streams theta-vexillary windows of W_n in lexicographic order. */
TVX_API tvx_status tvx_enumerate(int n, unsigned jobs, int allow_large, tvx_window_cb cb,
                                 void* user);

#ifdef __cplusplus
}
#endif

#endif
