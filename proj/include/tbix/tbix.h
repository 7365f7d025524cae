// Copyright 2026 The tbix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the tbix engine.
 *
 * Every function that can fail returns a tbix_status; on failure a
 * thread-local message (and, for malformed index files, a byte offset) can
 * be fetched with tbix_last_error_message / tbix_last_error_offset.
 * Handles are opaque and owned by the caller until passed to the matching
 * *_free function. Sizes are in bits unless stated otherwise.
 */
#ifndef TBIX_TBIX_H
#define TBIX_TBIX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TBIX_BUILDING_LIBRARY)
#    define TBIX_API __declspec(dllexport)
#  else
#    define TBIX_API __declspec(dllimport)
#  endif
#else
#  define TBIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tbix_status {
    TBIX_OK = 0,
    TBIX_ERR_INVALID_ARGUMENT = 1,
    TBIX_ERR_EMPTY_CORPUS = 2,
    TBIX_ERR_ENCODING = 3,
    TBIX_ERR_IO = 4,
    TBIX_ERR_FORMAT = 5,
    TBIX_ERR_DECODE = 6,
    TBIX_ERR_EMPTY_QUERY = 7,
    TBIX_ERR_UNKNOWN_TERMS = 8,
    TBIX_ERR_SCOPE = 9,
    TBIX_ERR_STATE = 10,
    TBIX_ERR_INTERNAL = 99
} tbix_status;

typedef enum tbix_strategy {
    TBIX_STRATEGY_EXHAUSTIVE = 0,
    TBIX_STRATEGY_TIERED = 1,
    TBIX_STRATEGY_BLOCK = 2,
    TBIX_STRATEGY_ORACLE = 3
} tbix_strategy;

typedef enum tbix_model_kind {
    TBIX_MODEL_EXACT = 0,
    TBIX_MODEL_BLOOM = 1
} tbix_model_kind;

typedef struct tbix_index tbix_index;
typedef struct tbix_model tbix_model;
typedef struct tbix_result tbix_result;

typedef struct tbix_index_info {
    uint32_t doc_count;
    uint32_t term_count;
    uint32_t max_df;
    uint64_t total_bits;
    int has_vocabulary;
    int has_tier;
    uint32_t k;
    uint32_t replaced_count;
    int has_blocks;
    uint32_t beta;
    uint32_t hybrid_threshold;
} tbix_index_info;

typedef struct tbix_result_stats {
    uint64_t candidates_scanned;
    uint64_t model_probes;
    int guaranteed;
    int used_fallback;
    size_t unknown_count;
} tbix_result_stats;

typedef struct tbix_df_bucket {
    uint32_t df;
    uint32_t term_count;
} tbix_df_bucket;

typedef struct tbix_gain_row {
    uint32_t k;
    uint32_t replaced;
    double trunc_bits;
    int trunc_extrapolated;
    int has_measured_trunc_bits;
    double measured_trunc_bits;
} tbix_gain_row;

typedef struct tbix_guarantee_row {
    uint32_t k;
    uint32_t query_count;
    double pct_with_model;
    double pct_without_model;
} tbix_guarantee_row;

typedef void (*tbix_selftest_callback)(const char* name, int passed, const char* detail,
                                       void* user_data);

/* Errors */
TBIX_API const char* tbix_status_name(tbix_status status);
TBIX_API const char* tbix_last_error_message(void);
/* Byte offset of the last TBIX_ERR_FORMAT / TBIX_ERR_ENCODING, or -1. */
TBIX_API int64_t tbix_last_error_offset(void);

/* Index lifecycle */
TBIX_API tbix_status tbix_index_build(const char* corpus_path, tbix_index** out);
TBIX_API tbix_status tbix_index_build_from_text(const char* text, size_t length, tbix_index** out);
TBIX_API tbix_status tbix_index_load(const char* path, tbix_index** out);
TBIX_API tbix_status tbix_index_save(const tbix_index* index, const char* path);
TBIX_API void tbix_index_free(tbix_index* index);
TBIX_API tbix_status tbix_index_get_info(const tbix_index* index, tbix_index_info* out);
/* Attach (or replace) the two-tier partition with truncation length k >= 1. */
TBIX_API tbix_status tbix_index_build_tier(tbix_index* index, uint32_t k);
/* Attach (or replace) the block partition; hybrid_threshold 0 disables hybrid lists. */
TBIX_API tbix_status tbix_index_build_blocks(tbix_index* index, uint32_t beta,
                                             uint32_t hybrid_threshold);

/* Membership models. The model covers exactly the terms the strategy needs:
 * every term for exhaustive/oracle, replaced terms for tiered, non-hybrid
 * terms for block. bits_per_pair is ignored for exact models. The model
 * borrows nothing from the index and stays valid after the index is freed,
 * but it must only be used with the index (and partitions) it was built for. */
TBIX_API tbix_status tbix_model_create(const tbix_index* index, tbix_model_kind kind,
                                       tbix_strategy strategy, uint32_t bits_per_pair,
                                       tbix_model** out);
TBIX_API void tbix_model_free(tbix_model* model);
TBIX_API int tbix_model_is_exact(const tbix_model* model);

/* Queries. `model` may be NULL for the oracle strategy. A query with unknown
 * tokens yields an empty result whose unknown tokens can be listed. */
TBIX_API tbix_status tbix_query_run(const tbix_index* index, const tbix_model* model,
                                    tbix_strategy strategy, int fallback, const char* query_text,
                                    tbix_result** out);
TBIX_API size_t tbix_result_size(const tbix_result* result);
TBIX_API const uint32_t* tbix_result_docs(const tbix_result* result);
TBIX_API void tbix_result_get_stats(const tbix_result* result, tbix_result_stats* out);
TBIX_API const char* tbix_result_unknown_token(const tbix_result* result, size_t i);
TBIX_API void tbix_result_free(tbix_result* result);

/* Analyses */
/* Two-call pattern: pass out=NULL to obtain the bucket count. */
TBIX_API tbix_status tbix_df_histogram(const tbix_index* index, tbix_df_bucket* out,
                                       size_t capacity, size_t* count);
TBIX_API tbix_status tbix_storage_fraction_curve(const tbix_index* index, const double* fractions,
                                                 size_t count, uint32_t* min_terms);
/* gains[i] receives the estimated gain for model cost s_values[i]. */
TBIX_API tbix_status tbix_gain(const tbix_index* index, uint32_t k, const double* s_values,
                               size_t s_count, tbix_gain_row* row, double* gains);
/* Empty lines are skipped; queries whose tokens are all unknown still count. */
TBIX_API tbix_status tbix_guarantees(const tbix_index* index, const char* const* queries,
                                     size_t query_count, uint32_t k, tbix_guarantee_row* out);

/* Runs the built-in three-document fixture suite. */
TBIX_API tbix_status tbix_selftest(tbix_selftest_callback callback, void* user_data,
                                   uint32_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* TBIX_TBIX_H */
