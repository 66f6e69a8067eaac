#ifndef BANDBRAID_H
#define BANDBRAID_H

/* C interface to the band-generator braid kernel.
 *
 * Every fallible call returns a bandbraid_status. On failure the message and
 * (for parse errors) the 0-based byte position are available from
 * bandbraid_last_error() and bandbraid_last_error_position() on the calling
 * thread until its next failing call. Handles are opaque and owned by the
 * caller; strings returned through char** are freed with bandbraid_string_free.
 * Words act left to right: the first letter is applied first. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BANDBRAID_API __declspec(dllexport)
#else
#define BANDBRAID_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bandbraid_status {
  BANDBRAID_OK = 0,
  BANDBRAID_SYNTAX = 1,
  BANDBRAID_INDEX_OUT_OF_RANGE = 2,
  BANDBRAID_DEGENERATE_LETTER = 3,
  BANDBRAID_MISORDERED_LETTER = 4,
  BANDBRAID_INVALID_STRAND_COUNT = 5,
  BANDBRAID_MISMATCHED_STRANDS = 6,
  BANDBRAID_NOT_CANONICAL_FACTOR = 7,
  BANDBRAID_CROSSING_CYCLES = 8,
  BANDBRAID_OVERLAPPING_CYCLES = 9,
  BANDBRAID_NOT_POSITIVE = 10,
  BANDBRAID_CAP_EXCEEDED = 11,
  BANDBRAID_INVALID_ARGUMENT = 12,
  BANDBRAID_OUT_OF_MEMORY = 98,
  BANDBRAID_INTERNAL = 99
} bandbraid_status;

typedef struct bandbraid_word bandbraid_word;
typedef struct bandbraid_nf bandbraid_nf;
typedef struct bandbraid_factor_list bandbraid_factor_list;
typedef struct bandbraid_sss bandbraid_sss;

typedef struct bandbraid_caps {
  size_t sss_elements;
  size_t cycling_iterations;
  size_t bfs_nodes;
} bandbraid_caps;

/* 10^6 for every cap. */
BANDBRAID_API bandbraid_caps bandbraid_default_caps(void);

BANDBRAID_API const char* bandbraid_status_name(bandbraid_status status);
BANDBRAID_API const char* bandbraid_last_error(void);
/* -1 when the last error has no position. */
BANDBRAID_API long bandbraid_last_error_position(void);
BANDBRAID_API void bandbraid_string_free(char* s);

/* Words */
BANDBRAID_API bandbraid_status bandbraid_word_parse(const char* text, int n, bandbraid_word** out);
BANDBRAID_API bandbraid_status bandbraid_word_random(int n, size_t length, uint64_t seed,
                                                     bandbraid_word** out);
BANDBRAID_API void bandbraid_word_free(bandbraid_word* w);
BANDBRAID_API int bandbraid_word_strands(const bandbraid_word* w);
BANDBRAID_API size_t bandbraid_word_length(const bandbraid_word* w);
BANDBRAID_API bandbraid_status bandbraid_word_render(const bandbraid_word* w, char** out);
BANDBRAID_API bandbraid_status bandbraid_word_concat(const bandbraid_word* a, const bandbraid_word* b,
                                                     bandbraid_word** out);
BANDBRAID_API bandbraid_status bandbraid_word_free_reduce(const bandbraid_word* w, bandbraid_word** out);
BANDBRAID_API bandbraid_status bandbraid_word_invert(const bandbraid_word* w, bandbraid_word** out);
BANDBRAID_API bandbraid_status bandbraid_word_to_artin(const bandbraid_word* w, bandbraid_word** out);
BANDBRAID_API bandbraid_status bandbraid_word_tau(const bandbraid_word* w, int k, bandbraid_word** out);

/* Normal forms */
BANDBRAID_API bandbraid_status bandbraid_normalize(const bandbraid_word* w, bandbraid_nf** out);
BANDBRAID_API bandbraid_status bandbraid_nf_parse(const char* text, int n, bandbraid_nf** out);
BANDBRAID_API void bandbraid_nf_free(bandbraid_nf* nf);
BANDBRAID_API int bandbraid_nf_strands(const bandbraid_nf* nf);
BANDBRAID_API int bandbraid_nf_power(const bandbraid_nf* nf);
BANDBRAID_API int bandbraid_nf_inf(const bandbraid_nf* nf);
BANDBRAID_API int bandbraid_nf_sup(const bandbraid_nf* nf);
BANDBRAID_API size_t bandbraid_nf_length(const bandbraid_nf* nf);
BANDBRAID_API bandbraid_status bandbraid_nf_render(const bandbraid_nf* nf, char** out);
BANDBRAID_API bandbraid_status bandbraid_nf_factors(const bandbraid_nf* nf, bandbraid_factor_list** out);
BANDBRAID_API bandbraid_status bandbraid_nf_to_word(const bandbraid_nf* nf, bandbraid_word** out);
BANDBRAID_API bandbraid_status bandbraid_nf_invert(const bandbraid_nf* nf, bandbraid_nf** out);
BANDBRAID_API bandbraid_status bandbraid_nf_multiply(const bandbraid_nf* a, const bandbraid_nf* b,
                                                     bandbraid_nf** out);
BANDBRAID_API bandbraid_status bandbraid_nf_equal(const bandbraid_nf* a, const bandbraid_nf* b, int* result);
BANDBRAID_API bandbraid_status bandbraid_equal(const bandbraid_word* v, const bandbraid_word* w, int* result);

/* Canonical factor lists */
BANDBRAID_API bandbraid_status bandbraid_factors_enumerate(int n, bandbraid_factor_list** out);
BANDBRAID_API void bandbraid_factor_list_free(bandbraid_factor_list* list);
BANDBRAID_API size_t bandbraid_factor_list_size(const bandbraid_factor_list* list);
/* Cycle notation, e.g. "(5,4,1)(3,2)", or "()" for the identity. */
BANDBRAID_API bandbraid_status bandbraid_factor_render(const bandbraid_factor_list* list, size_t i, char** out);
/* Cycles of factor i, each written in descending order and followed by a 0.
 * Writes at most `capacity` ints and always stores the full count in
 * *needed; BANDBRAID_INVALID_ARGUMENT if the buffer is too small. */
BANDBRAID_API bandbraid_status bandbraid_factor_cycles(const bandbraid_factor_list* list, size_t i,
                                                       int* buffer, size_t capacity, size_t* needed);

/* Conjugacy */
typedef enum bandbraid_verdict {
  BANDBRAID_TRUE = 0,
  BANDBRAID_FALSE = 1,
  BANDBRAID_UNDECIDED = 3
} bandbraid_verdict;

typedef struct bandbraid_conjugacy_info {
  bandbraid_verdict verdict;
  int inf_first;
  int sup_first;
  int inf_second;
  int sup_second;
  size_t sss_size; /* 0 when the sets were never built */
} bandbraid_conjugacy_info;

/* *conjugator receives z with z^-1 first z = second when conjugate, else NULL.
 * Pass NULL for conjugator to skip it; NULL caps means the defaults. */
BANDBRAID_API bandbraid_status bandbraid_are_conjugate(const bandbraid_word* first,
                                                       const bandbraid_word* second,
                                                       const bandbraid_caps* caps,
                                                       bandbraid_conjugacy_info* info,
                                                       bandbraid_word** conjugator);
/* representative = conjugator^-1 input conjugator. */
BANDBRAID_API bandbraid_status bandbraid_summit(const bandbraid_nf* nf, const bandbraid_caps* caps,
                                                bandbraid_nf** representative, bandbraid_nf** conjugator);

BANDBRAID_API bandbraid_status bandbraid_sss_compute(const bandbraid_nf* nf, const bandbraid_caps* caps,
                                                     bandbraid_sss** out);
BANDBRAID_API void bandbraid_sss_free(bandbraid_sss* sss);
BANDBRAID_API int bandbraid_sss_inf(const bandbraid_sss* sss);
BANDBRAID_API int bandbraid_sss_sup(const bandbraid_sss* sss);
BANDBRAID_API size_t bandbraid_sss_size(const bandbraid_sss* sss);
BANDBRAID_API bandbraid_status bandbraid_sss_element(const bandbraid_sss* sss, size_t i, bandbraid_nf** out);
BANDBRAID_API bandbraid_status bandbraid_sss_contains(const bandbraid_sss* sss, const bandbraid_nf* nf,
                                                      int* result);

typedef struct bandbraid_orbit_info {
  size_t cycling_orbits;
  size_t decycling_orbits;
  size_t combined_orbits;
  size_t cycling_periods; /* number of periodic cycles of the cycling map */
} bandbraid_orbit_info;

BANDBRAID_API bandbraid_status bandbraid_sss_orbits(const bandbraid_sss* sss, bandbraid_orbit_info* info);
/* Sorted lengths of the periodic cycling cycles; same buffer protocol as
 * bandbraid_factor_cycles. */
BANDBRAID_API bandbraid_status bandbraid_sss_cycling_periods(const bandbraid_sss* sss, size_t* buffer,
                                                             size_t capacity, size_t* needed);

/* Brute-force oracle */
typedef enum bandbraid_oracle_verdict {
  BANDBRAID_EQUIVALENT = 0,
  BANDBRAID_NOT_EQUIVALENT = 1,
  BANDBRAID_ORACLE_UNDECIDED = 3
} bandbraid_oracle_verdict;

BANDBRAID_API bandbraid_status bandbraid_oracle_equal(const bandbraid_word* v, const bandbraid_word* w,
                                                      size_t node_cap, bandbraid_oracle_verdict* verdict);

typedef struct bandbraid_check_report {
  size_t words;
  size_t pairs;
  size_t classes;
  size_t undecided;
  size_t disagreements;
} bandbraid_check_report;

/* Cancellation: words = positive words examined, pairs = (a, X, Y) triples,
 * disagreements = counterexamples. Optional *details lists counterexamples,
 * one per line (NULL when there are none). */
BANDBRAID_API bandbraid_status bandbraid_verify_cancellation(int n, size_t bound, size_t node_cap,
                                                             bandbraid_check_report* report, char** details);
/* Every pair of positive words of equal length <= max_length. */
BANDBRAID_API bandbraid_status bandbraid_verify_positive(int n, size_t max_length, size_t node_cap,
                                                         bandbraid_check_report* report, char** details);
/* Seeded signed-word pairs, mixing unrelated, mutated and re-spelled words. */
BANDBRAID_API bandbraid_status bandbraid_verify_random(int n, size_t trials, size_t max_length, uint64_t seed,
                                                       size_t node_cap, bandbraid_check_report* report,
                                                       char** details);

#ifdef __cplusplus
}
#endif

#endif
