/*
 * sumset — restricted h-fold sumsets of integer sets.
 *
 * C API for libsumset. Computes the sumset h^(r)A (each element a_i used at
 * most r_i times, h elements in total), the exact extremal lower bound on
 * its cardinality, unit-move paths between compositions, equality
 * classification against the bound, and extremal-set search.
 *
 * Conventions:
 *   - every function returns a sumset_status; results come out through
 *     pointers,
 *   - objects returned through sumset_*** out-parameters are owned by the
 *     caller and released with the matching *_free function,
 *   - all functions are safe to call from multiple threads; error messages
 *     are per-thread.
 */

#ifndef SUMSET_H
#define SUMSET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SUMSET_API __declspec(dllexport)
#else
#define SUMSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define SUMSET_VERSION "1.0.0"

typedef enum sumset_status {
  SUMSET_OK = 0,
  SUMSET_ERR_ARGUMENT = 1, /* bad lengths, caps < 1, set not increasing, ... */
  SUMSET_ERR_RANGE = 2,    /* h or another parameter outside its domain */
  SUMSET_ERR_OVERFLOW = 3, /* a result would not fit 64-bit integers */
  SUMSET_ERR_BUDGET = 4,   /* instance too large for the chosen algorithm */
  SUMSET_ERR_INTERNAL = 5
} sumset_status;

/* Equality-characterization verdicts for |h^(r)A| against the bound. */
typedef enum sumset_verdict {
  SUMSET_VERDICT_ALWAYS_EQUAL = 0,
  SUMSET_VERDICT_EQUAL_IFF_AP = 1,
  SUMSET_VERDICT_EQUAL_IFF_END_GAPS = 2, /* k = 4: a1 - a0 = a3 - a2 */
  SUMSET_VERDICT_OUT_OF_RANGE = 3
} sumset_verdict;

typedef struct sumset_values sumset_values;   /* a computed sumset */
typedef struct sumset_profile sumset_profile; /* extremal compositions + bound */
typedef struct sumset_path sumset_path;       /* a unit-move path */
typedef struct sumset_sets sumset_sets;       /* a list of integer sets */

SUMSET_API const char* sumset_version(void);
SUMSET_API const char* sumset_status_name(sumset_status status);
SUMSET_API const char* sumset_verdict_name(sumset_verdict verdict);
/* Message from the last failing call on this thread; empty if none. */
SUMSET_API const char* sumset_last_error(void);

/*
 * Sumset computation. `set` holds k strictly increasing integers, `caps`
 * holds k caps >= 1, and 0 <= h <= sum(caps).
 */
SUMSET_API sumset_status sumset_compute(const int64_t* set, size_t k,
                                        const int64_t* caps, int64_t h,
                                        sumset_values** out);
/* Brute-force enumeration oracle; refuses instances with more than `budget`
 * compositions (budget 0 selects the built-in default of 1e7). */
SUMSET_API sumset_status sumset_compute_oracle(const int64_t* set, size_t k,
                                               const int64_t* caps, int64_t h,
                                               uint64_t budget,
                                               sumset_values** out);
/* hA: every element usable up to h times. Requires h >= 1. */
SUMSET_API sumset_status sumset_classic(const int64_t* set, size_t k,
                                        int64_t h, sumset_values** out);
/* h^A: pairwise distinct summands. Requires 1 <= h <= k. */
SUMSET_API sumset_status sumset_distinct(const int64_t* set, size_t k,
                                         int64_t h, sumset_values** out);

SUMSET_API size_t sumset_values_count(const sumset_values* values);
/* Sorted ascending; valid until the object is freed. */
SUMSET_API const int64_t* sumset_values_data(const sumset_values* values);
SUMSET_API void sumset_values_free(sumset_values* values);

/*
 * Extremal bound. The profile carries the front/back packing indices and
 * offsets, the left-packed (minimal) and right-packed (maximal)
 * compositions, and the tight cardinality bound.
 */
SUMSET_API sumset_status sumset_lower_bound(const int64_t* caps, size_t k,
                                            int64_t h, int64_t* out);
/* Closed form for uniform caps (r, ..., r); requires 1 <= h <= r*k. */
SUMSET_API sumset_status sumset_uniform_lower_bound(int64_t k, int64_t r,
                                                    int64_t h, int64_t* out);
SUMSET_API sumset_status sumset_profile_compute(const int64_t* caps, size_t k,
                                                int64_t h,
                                                sumset_profile** out);
SUMSET_API int64_t sumset_profile_front_index(const sumset_profile* profile);
SUMSET_API int64_t sumset_profile_front_offset(const sumset_profile* profile);
SUMSET_API int64_t sumset_profile_back_index(const sumset_profile* profile);
SUMSET_API int64_t sumset_profile_back_offset(const sumset_profile* profile);
SUMSET_API int64_t sumset_profile_bound(const sumset_profile* profile);
/* k entries each; valid until the profile is freed. */
SUMSET_API const int64_t* sumset_profile_min_composition(
    const sumset_profile* profile);
SUMSET_API const int64_t* sumset_profile_max_composition(
    const sumset_profile* profile);
SUMSET_API void sumset_profile_free(sumset_profile* profile);

/*
 * Paths. `from` and `to` must lie in R(caps, h) with every suffix sum of
 * `from` at most that of `to`; pass NULL for either to use the minimal or
 * maximal composition respectively.
 */
SUMSET_API sumset_status sumset_path_build(const int64_t* caps, size_t k,
                                           int64_t h, const int64_t* from,
                                           const int64_t* to,
                                           sumset_path** out);
SUMSET_API size_t sumset_path_length(const sumset_path* path);
/* Node i as k entries; valid until the path is freed. */
SUMSET_API const int64_t* sumset_path_node(const sumset_path* path, size_t i);
SUMSET_API void sumset_path_free(sumset_path* path);

/* |R(caps, h)|, saturating at UINT64_MAX. */
SUMSET_API sumset_status sumset_composition_count(const int64_t* caps,
                                                  size_t k, int64_t h,
                                                  uint64_t* out);

/*
 * Classification of |h^(r)A| against the bound.
 */
typedef struct sumset_prediction {
  sumset_verdict verdict;
  const char* source; /* static string naming the case that fired */
  int predicted;      /* 1 or 0; -1 when no prediction applies */
} sumset_prediction;

typedef struct sumset_classification {
  int64_t cardinality; /* |h^(r)A| */
  int64_t bound;       /* the extremal lower bound */
  int equal;
  int is_ap;
  sumset_prediction prediction;
  int consistent; /* prediction agrees with reality (1 when none made) */
} sumset_classification;

SUMSET_API sumset_status sumset_is_ap(const int64_t* set, size_t k, int* out);
SUMSET_API sumset_status sumset_predict(const int64_t* set, size_t k,
                                        const int64_t* caps, int64_t h,
                                        sumset_prediction* out);
SUMSET_API sumset_status sumset_classify(const int64_t* set, size_t k,
                                         const int64_t* caps, int64_t h,
                                         sumset_classification* out);

/*
 * Search for all normalized sets attaining the bound: a_0 = 0, consecutive
 * differences with gcd 1, largest element <= max_element. Results are in
 * lexicographic order for any `jobs` (0 behaves as 1).
 */
SUMSET_API sumset_status sumset_search(const int64_t* caps, size_t k,
                                       int64_t h, int64_t max_element,
                                       unsigned jobs, sumset_sets** out);
SUMSET_API size_t sumset_sets_count(const sumset_sets* sets);
/* Set i as k entries; valid until the list is freed. */
SUMSET_API const int64_t* sumset_sets_get(const sumset_sets* sets, size_t i);
SUMSET_API void sumset_sets_free(sumset_sets* sets);

#ifdef __cplusplus
}
#endif

#endif /* SUMSET_H */
