#ifndef BNQA_H
#define BNQA_H

#pragma once

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum BnqaStatus {
  BNQA_STATUS_OK = 0,
  BNQA_STATUS_NULL_ARGUMENT = 1,
  BNQA_STATUS_INVALID_UTF8 = 2,
  BNQA_STATUS_IO = 3,
  BNQA_STATUS_PARSE = 4,
  BNQA_STATUS_INDEX_FORMAT = 5,
  BNQA_STATUS_EMPTY_QUESTION = 6,
  BNQA_STATUS_CONFIG = 7,
  BNQA_STATUS_INVALID_ARGUMENT = 8,
  BNQA_STATUS_PANIC = 99,
} BnqaStatus;

/**
 * Corpus layout accepted by [`bnqa_index_build`].
 */
typedef enum BnqaFormat {
  BNQA_FORMAT_PLAIN = 0,
  BNQA_FORMAT_TSV = 1,
} BnqaFormat;

/**
 * Opaque question answering engine.
 */
typedef struct BnqaEngine BnqaEngine;

/**
 * Opaque corpus index.
 */
typedef struct BnqaIndex BnqaIndex;

/**
 * Evaluation percentages, truncated to two decimals.
 */
typedef struct BnqaMetrics {
  double accuracy;
  double precision;
  double recall;
  double f1;
  /**
   * Set when a denominator was zero and the affected values are 0.
   */
  bool degenerate;
} BnqaMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library from the same thread.
 */
const char *bnqa_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *bnqa_version(void);

/**
 * Ingests a corpus file with the bundled tagger and builds an index.
 *
 * # Safety
 * `path` must be a valid C string and `out` a valid pointer.
 */
enum BnqaStatus bnqa_index_build(const char *path, enum BnqaFormat format, struct BnqaIndex **out);

/**
 * Loads an index file written by `bnqa index` or [`bnqa_index_save`].
 *
 * # Safety
 * `path` must be a valid C string and `out` a valid pointer.
 */
enum BnqaStatus bnqa_index_load(const char *path, struct BnqaIndex **out);

/**
 * # Safety
 * `index` must come from this library and `path` must be a valid C string.
 */
enum BnqaStatus bnqa_index_save(const struct BnqaIndex *index, const char *path);

/**
 * Number of sentences in the index, 0 for null.
 *
 * # Safety
 * `index` must be null or come from this library.
 */
size_t bnqa_index_len(const struct BnqaIndex *index);

/**
 * # Safety
 * `index` must be null or come from this library, and not be used afterwards.
 */
void bnqa_index_free(struct BnqaIndex *index);

/**
 * Creates an engine over a copy of `index`. `config_toml` may be null for
 * defaults; otherwise it uses the same keys as a `QA_CONFIG` file. The
 * index handle stays owned by the caller.
 *
 * # Safety
 * `index` must come from this library, `config_toml` must be null or a
 * valid C string, and `out` a valid pointer.
 */
enum BnqaStatus bnqa_engine_new(const struct BnqaIndex *index,
                                const char *config_toml,
                                struct BnqaEngine **out);

/**
 * # Safety
 * `engine` must be null or come from this library, and not be used afterwards.
 */
void bnqa_engine_free(struct BnqaEngine *engine);

/**
 * Answers `question` and stores a JSON array of up to `k` ranked answers in
 * `*out_json`. Release it with [`bnqa_string_free`]. A `k` of 0 uses the
 * engine's configured top-k.
 *
 * # Safety
 * `engine` must come from this library, `question` must be a valid C string
 * and `out_json` a valid pointer.
 */
enum BnqaStatus bnqa_ask_json(const struct BnqaEngine *engine,
                              const char *question,
                              size_t k,
                              char **out_json);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed only once.
 */
void bnqa_string_free(char *s);

/**
 * Accuracy, precision, recall and F1 from confusion counts.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BnqaStatus bnqa_metrics(uint64_t tp,
                             uint64_t tn,
                             uint64_t fp,
                             uint64_t fn_,
                             struct BnqaMetrics *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BNQA_H */
