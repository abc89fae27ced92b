/*
 * C interface to the sidon library.
 *
 * Objects are opaque handles created by *_parse / *_create style functions
 * and released with the matching *_free.  Every fallible call returns a
 * sidon_status; on failure a description is available from
 * sidon_last_error() until the next call on the same thread.
 *
 * Arbitrary-precision integers cross this boundary as decimal strings.
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with sidon_string_free().  Reports are JSON documents
 * with a fixed key order; big integers inside them are decimal strings.
 */
#ifndef SIDON_SIDON_H
#define SIDON_SIDON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SIDON_BUILDING_LIBRARY)
#    define SIDON_API __declspec(dllexport)
#  else
#    define SIDON_API __declspec(dllimport)
#  endif
#else
#  define SIDON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sidon_status {
  SIDON_OK = 0,
  SIDON_ERR_INVALID_INPUT = 1,
  SIDON_ERR_PRECONDITION = 2,
  SIDON_ERR_BUDGET = 3,
  SIDON_ERR_EXHAUSTED = 4,
  SIDON_ERR_IO = 5,
  SIDON_ERR_INTERNAL = 6
} sidon_status;

typedef enum sidon_trace_format {
  SIDON_TRACE_JSON = 0,
  SIDON_TRACE_CSV = 1
} sidon_trace_format;

/* Enumeration limits.  Initialize with sidon_options_init; a NULL options
 * pointer means the defaults. */
typedef struct sidon_options {
  uint64_t tuple_budget;     /* max h-tuples per enumeration (default 1e8) */
  uint64_t forbidden_budget; /* max value pairs for sidon_forbidden_values (default 1e8) */
  uint32_t arity_limit;      /* max arity for the 3^h property-N check (default 20) */
  uint32_t threads;          /* worker count; results never depend on it (default 1) */
} sidon_options;

typedef struct sidon_form sidon_form;
typedef struct sidon_set sidon_set;
typedef struct sidon_sequence sidon_sequence;
typedef struct sidon_trace sidon_trace;

SIDON_API const char* sidon_version(void);
SIDON_API void sidon_options_init(sidon_options* options);
SIDON_API const char* sidon_last_error(void);
SIDON_API const char* sidon_status_name(sidon_status status);
SIDON_API void sidon_string_free(char* text);

/* ---- linear forms ---- */

/* "1,-2,4"; rejects empty lists, non-integers and zero coefficients. */
SIDON_API sidon_status sidon_form_parse(const char* text, sidon_form** out);
SIDON_API void sidon_form_free(sidon_form* form);
SIDON_API size_t sidon_form_arity(const sidon_form* form);
/* C = sum |c_i| */
SIDON_API sidon_status sidon_form_norm(const sidon_form* form, char** out);
/* Bit i-1 of mask selects position i. */
SIDON_API sidon_status sidon_form_subset_sum(const sidon_form* form, uint64_t mask, char** out);
SIDON_API sidon_status sidon_form_contraction(const sidon_form* form, uint64_t mask, sidon_form** out);
/* JSON {property_N, witness?: {I1, I2, sum}, vanishing_subset?, C, h} */
SIDON_API sidon_status sidon_check_form(const sidon_form* form, const sidon_options* options, int* has_property_n,
                                        char** json);

/* ---- finite sets ---- */

/* Bare CSV "0,1,2", "list:<csv>" or "file:<path>".  Order is free;
 * duplicates are rejected. */
SIDON_API sidon_status sidon_set_parse(const char* text, sidon_set** out);
/* The first `terms` values of a sequence. */
SIDON_API sidon_status sidon_set_from_sequence(sidon_sequence* sequence, size_t terms, sidon_set** out);
SIDON_API void sidon_set_free(sidon_set* set);
SIDON_API size_t sidon_set_size(const sidon_set* set);

/* JSON {sidon, witness?: {tuple1, tuple2, value}, distinct, total} */
SIDON_API sidon_status sidon_verify(const sidon_form* form, const sidon_set* set, const sidon_options* options,
                                    int* is_sidon, char** json);
/* JSON {values: [...], distinct, total} */
SIDON_API sidon_status sidon_phi_image(const sidon_form* form, const sidon_set* set, const sidon_options* options,
                                       char** json);
/* JSON [{J: [...], shift, values: [...]}, ...] indexed by J's mask. */
SIDON_API sidon_status sidon_translate_family(const sidon_form* form, const sidon_set* set, const char* b,
                                              const sidon_options* options, char** json);
/* set must be phi-Sidon.  JSON {extendable, conflict?: {J1, J2, value, tuple1, tuple2}} */
SIDON_API sidon_status sidon_can_extend(const sidon_form* form, const sidon_set* set, const char* b,
                                        const sidon_options* options, int* extendable, char** json);
/* JSON {values: [...], count} */
SIDON_API sidon_status sidon_forbidden_values(const sidon_form* form, const sidon_set* set,
                                              const sidon_options* options, char** json);

/* ---- sequences ---- */

/* file:<path>, squares, cubes, primes, arith:<a0>,<d>, geom:<a0>,<ratio>,
 * affine-geom:<a0>,<ratio>,<offset>, list:<csv> */
SIDON_API sidon_status sidon_sequence_parse(const char* spec, sidon_sequence** out);
SIDON_API void sidon_sequence_free(sidon_sequence* sequence);
/* 1-based; SIDON_ERR_EXHAUSTED past the end of a finite source. */
SIDON_API sidon_status sidon_sequence_term(sidon_sequence* sequence, size_t k, char** out);

/* ---- constructions ---- */

SIDON_API sidon_status sidon_construct_poly(const sidon_form* form, sidon_sequence* sequence, size_t terms,
                                           const sidon_options* options, sidon_trace** out);
/* m is a nonnegative integer, m0 a positive rational "p/q" or integer (NULL
 * means max(m, 1)).  offsets, when non-NULL, holds offsets_len entries;
 * offsets[k-2] is applied at step k >= 2 (a_k = b_k + offset), zero past
 * the end. */
SIDON_API sidon_status sidon_construct_bounded(const sidon_form* form, sidon_sequence* sequence, const char* m,
                                              const char* m0, size_t terms, const int64_t* offsets,
                                              size_t offsets_len, const sidon_options* options, sidon_trace** out);
SIDON_API void sidon_trace_free(sidon_trace* trace);
SIDON_API size_t sidon_trace_length(const sidon_trace* trace);
SIDON_API sidon_status sidon_trace_render(const sidon_trace* trace, sidon_trace_format format, char** out);
SIDON_API sidon_status sidon_trace_write(const sidon_trace* trace, sidon_trace_format format, const char* path);
/* The constructed set {a_1, ..., a_K}. */
SIDON_API sidon_status sidon_trace_set(const sidon_trace* trace, sidon_set** out);

/* ---- bounds and certificates ---- */

/* JSON {pass, C, m, first_violation?: {k, kind}} */
SIDON_API sidon_status sidon_check_growth(const sidon_form* form, sidon_sequence* sequence, const char* m,
                                         size_t terms, int* pass, char** json);
/* JSON {s, t, lhs, rhs, m0, contradiction} */
SIDON_API sidon_status sidon_window_certificate(const sidon_form* form, sidon_sequence* sequence, const char* m0,
                                               size_t s, size_t t, int* contradiction, char** json);
/* JSON {found, certificate?: {...}} */
SIDON_API sidon_status sidon_refute_bounded(const sidon_form* form, sidon_sequence* sequence, const char* m0,
                                           size_t limit, int* found, char** json);
/* epsilon as "p/q" or integer.  JSON {pass, epsilon, violation_count, violations: [{s, t}]} */
SIDON_API sidon_status sidon_density_check(sidon_sequence* sequence, size_t arity, const char* epsilon,
                                          size_t terms, int* pass, char** json);
/* 4^h n^{2h-1} + n < (n+1)^{4h} */
SIDON_API sidon_status sidon_poly_bound_holds(size_t arity, uint64_t n, int* holds);
/* All h in [1, max_arity], n in [1, max_n].  JSON {all_hold, max_h, max_n, checked, first_failure?: {h, n}} */
SIDON_API sidon_status sidon_bound_sweep(size_t max_arity, uint64_t max_n, int* all_hold, char** json);

#ifdef __cplusplus
}
#endif

#endif /* SIDON_SIDON_H */
