/* Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0. */
/*
 * C interface to the cy4 library.
 *
 * Every call returns a cy4_status. Output strings are heap-allocated by the
 * library and must be released with cy4_string_free; they are NULL on error.
 * After a nonzero status, cy4_last_error() describes the failure for the
 * calling thread until its next library call.
 *
 * Output-producing calls take a format: CY4_FORMAT_TEXT or CY4_FORMAT_JSON.
 * Both are deterministic for identical inputs.
 */
#ifndef CY4_CY4_H_
#define CY4_CY4_H_

#include <stdint.h>

#if defined(__GNUC__)
#define CY4_API __attribute__((visibility("default")))
#else
#define CY4_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CY4_OK = 0,
  CY4_MATH_FAIL = 1,   /* a mathematical check evaluated to false */
  CY4_INPUT_ERROR = 2, /* malformed input, unknown names, parameter violations */
  CY4_RESOURCE = 3     /* a configured bound was exceeded */
} cy4_status;

typedef enum { CY4_FORMAT_TEXT = 0, CY4_FORMAT_JSON = 1 } cy4_format;

/* A graded quiver with its declared pairing and superpotential. */
typedef struct cy4_quiver cy4_quiver;

CY4_API const char* cy4_version(void);
CY4_API const char* cy4_last_error(void);
CY4_API void cy4_string_free(char* s);

/* ------------------------------------------------------------ quivers */

CY4_API cy4_status cy4_quiver_load(const char* path, cy4_quiver** out);
CY4_API cy4_status cy4_quiver_parse(const char* json_text, cy4_quiver** out);
/* name: "example", "c4" or "point" */
CY4_API cy4_status cy4_quiver_builtin(const char* name, cy4_quiver** out);
CY4_API void cy4_quiver_free(cy4_quiver* q);
/* File form of the quiver (JSON). */
CY4_API cy4_status cy4_quiver_emit(const cy4_quiver* q, char** out);
CY4_API cy4_status cy4_quiver_edge_count(const cy4_quiver* q, int* edges);
/* Master equation and d^2 = 0; CY4_MATH_FAIL with a witness in the report. */
CY4_API cy4_status cy4_quiver_check_master(const cy4_quiver* q, cy4_format fmt, char** out);
/* File form plus the completed generators and differentials (JSON). */
CY4_API cy4_status cy4_quiver_complete(const cy4_quiver* q, char** out);
CY4_API cy4_status cy4_quiver_diff(const cy4_quiver* q, const char* generator, cy4_format fmt, char** out);
/* frame: "js", "flag" or "ms"; r and l as for Flag(r) and MS(r, l). */
CY4_API cy4_status cy4_quiver_graft(const cy4_quiver* q, const char* frame, int r, int l, cy4_format fmt, char** out);

/* ---------------------------------------------------- representations */

CY4_API cy4_status cy4_rep_ext(const cy4_quiver* q, const char* rep_path, cy4_format fmt, char** out);
/* emit: "counts" or "reps"; n may not exceed max_n. */
CY4_API cy4_status cy4_rep_fixed_points(int n, const char* emit, int max_n, cy4_format fmt, char** out);
/* d and e are comma-separated dimension vectors in vertex order. */
CY4_API cy4_status cy4_euler(const cy4_quiver* q, const char* d, const char* e, long long* chi);

/* -------------------------------------------------------------- signs */

/* suite: "pentagon", "double-dual", "ot-compare" or "all" */
CY4_API cy4_status cy4_signs_verify(const char* suite, int max_rank, uint64_t seed, cy4_format fmt, char** out);

/* ------------------------------------------------------------- series */

/* regime: "local" or "global" */
CY4_API cy4_status cy4_series_expand(const char* expr, const char* regime, int order, cy4_format fmt, char** out);
CY4_API cy4_status cy4_series_sqrt_euler(const char* spec_path, int order, cy4_format fmt, char** out);
CY4_API cy4_status cy4_series_global_residue(const char* theta_path, int order, cy4_format fmt, char** out);

/* ------------------------------------------------------ wall-crossing */

/* alpha: comma-separated class; classes_path: class table JSON */
CY4_API cy4_status cy4_wc_js(const char* alpha, const char* classes_path, cy4_format fmt, char** out);
/* variant: "corrected" or "as-printed" */
CY4_API cy4_status cy4_wc_invert(const char* alpha, const char* classes_path, const char* variant, cy4_format fmt,
                         char** out);
CY4_API cy4_status cy4_wc_dtpt(int order, cy4_format fmt, char** out);
CY4_API cy4_status cy4_wc_hilb(int order, cy4_format fmt, char** out);

/* ---------------------------------------------------------------- toy */

CY4_API cy4_status cy4_toy_pushforward(int r, const char* expr, cy4_format fmt, char** out);
CY4_API cy4_status cy4_toy_bracket_check(int r, int a, cy4_format fmt, char** out);
CY4_API cy4_status cy4_toy_flag_residues(const char* spec_path, cy4_format fmt, char** out);

/* ------------------------------------------------------------- verify */

/* suite: "all", "quiver", "signs", "series", "wc", "toy" or "rep".
 * fixture_dir may be NULL or empty for the built-in fixtures.
 * elapsed_ms may be NULL. */
CY4_API cy4_status cy4_verify(const char* suite, uint64_t seed, int order, int max_n, const char* fixture_dir,
                      cy4_format fmt, char** out, double* elapsed_ms);

#ifdef __cplusplus
}
#endif

#endif /* CY4_CY4_H_ */
