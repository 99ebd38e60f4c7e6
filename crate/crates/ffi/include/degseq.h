#ifndef DEGSEQ_H
#define DEGSEQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DegseqStatus {
  DEGSEQ_STATUS_OK = 0,
  DEGSEQ_STATUS_NULL_POINTER = 1,
  DEGSEQ_STATUS_PARSE = 2,
  DEGSEQ_STATUS_INVALID_SEQUENCE = 3,
  DEGSEQ_STATUS_NOT_GRAPHIC = 4,
  DEGSEQ_STATUS_LABEL_OUT_OF_RANGE = 5,
  DEGSEQ_STATUS_TOO_LARGE = 6,
  DEGSEQ_STATUS_SAMPLER_STUCK = 7,
  DEGSEQ_STATUS_UTF8 = 8,
  DEGSEQ_STATUS_PANIC = 9,
  DEGSEQ_STATUS_OTHER = 10,
} DegseqStatus;

/**
 * Forced and forbidden edges of one sequence.
 */
typedef struct DegseqAnalysis DegseqAnalysis;

/**
 * A labeled simple graph on vertices `1..=n`.
 */
typedef struct DegseqGraph DegseqGraph;

/**
 * A validated non-increasing degree sequence.
 */
typedef struct DegseqSequence DegseqSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *degseq_version(void);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next library call on the same thread.
 */
const char *degseq_last_error_message(void);

/**
 * Parses comma- or space-separated degrees.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum DegseqStatus degseq_sequence_parse(const char *text, struct DegseqSequence **out);

/**
 * Builds a sequence from `len` non-increasing degrees.
 *
 * # Safety
 * `values` must point to `len` readable entries; `out` must be writable.
 */
enum DegseqStatus degseq_sequence_from_array(const size_t *values,
                                             size_t len,
                                             struct DegseqSequence **out);

/**
 * # Safety
 * `seq` must be null or a handle not yet freed.
 */
void degseq_sequence_free(struct DegseqSequence *seq);

/**
 * Number of entries; 0 for a null handle.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
size_t degseq_sequence_len(const struct DegseqSequence *seq);

/**
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
enum DegseqStatus degseq_sequence_is_graphic(const struct DegseqSequence *seq, bool *out);

/**
 * Whether edge `(i, j)` (1-based labels) is in every realization.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
enum DegseqStatus degseq_is_forced(const struct DegseqSequence *seq, size_t i, size_t j, bool *out);

/**
 * Whether edge `(i, j)` (1-based labels) is in no realization.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
enum DegseqStatus degseq_is_forbidden(const struct DegseqSequence *seq,
                                      size_t i,
                                      size_t j,
                                      bool *out);

/**
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
enum DegseqStatus degseq_analyze(const struct DegseqSequence *seq, struct DegseqAnalysis **out);

/**
 * # Safety
 * `analysis` must be null or a handle not yet freed.
 */
void degseq_analysis_free(struct DegseqAnalysis *analysis);

/**
 * # Safety
 * `analysis` must be null or a live handle.
 */
size_t degseq_analysis_forced_count(const struct DegseqAnalysis *analysis);

/**
 * # Safety
 * `analysis` must be null or a live handle.
 */
size_t degseq_analysis_forbidden_count(const struct DegseqAnalysis *analysis);

/**
 * The `index`-th forced edge in lexicographic order.
 *
 * # Safety
 * `analysis` must be a live handle; `out_i` and `out_j` must be writable.
 */
enum DegseqStatus degseq_analysis_forced_edge(const struct DegseqAnalysis *analysis,
                                              size_t index,
                                              size_t *out_i,
                                              size_t *out_j);

/**
 * The `index`-th forbidden edge in lexicographic order.
 *
 * # Safety
 * `analysis` must be a live handle; `out_i` and `out_j` must be writable.
 */
enum DegseqStatus degseq_analysis_forbidden_edge(const struct DegseqAnalysis *analysis,
                                                 size_t index,
                                                 size_t *out_i,
                                                 size_t *out_j);

/**
 * True iff the sequence has a single realization.
 *
 * # Safety
 * `analysis` must be null or a live handle.
 */
bool degseq_analysis_is_threshold(const struct DegseqAnalysis *analysis);

/**
 * # Safety
 * `analysis` must be null or a live handle.
 */
size_t degseq_analysis_max_forced_clique(const struct DegseqAnalysis *analysis);

/**
 * The analysis as a JSON document; free with `degseq_string_free`.
 *
 * # Safety
 * `analysis` must be a live handle; `out` must be writable.
 */
enum DegseqStatus degseq_analysis_to_json(const struct DegseqAnalysis *analysis, char **out);

/**
 * One realization by sequential importance sampling.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
enum DegseqStatus degseq_sample_sis(const struct DegseqSequence *seq,
                                    uint64_t seed,
                                    struct DegseqGraph **out);

/**
 * One realization after `steps` steps of the 2-switch chain.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
enum DegseqStatus degseq_sample_mcmc(const struct DegseqSequence *seq,
                                     uint64_t steps,
                                     uint64_t seed,
                                     struct DegseqGraph **out);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void degseq_graph_free(struct DegseqGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t degseq_graph_vertex_count(const struct DegseqGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t degseq_graph_edge_count(const struct DegseqGraph *graph);

/**
 * The `index`-th edge in lexicographic order.
 *
 * # Safety
 * `graph` must be a live handle; `out_i` and `out_j` must be writable.
 */
enum DegseqStatus degseq_graph_edge(const struct DegseqGraph *graph,
                                    size_t index,
                                    size_t *out_i,
                                    size_t *out_j);

/**
 * Runs the exhaustive sweep for length `n` (at most 7) on `jobs` threads
 * (0 for all cores). Writes the JSON report and whether every check passed.
 *
 * # Safety
 * `out_json` and `out_all_pass` must be writable.
 */
enum DegseqStatus degseq_verify(size_t n, size_t jobs, char **out_json, bool *out_all_pass);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void degseq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEGSEQ_H */
