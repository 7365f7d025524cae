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

#include "tbix/tbix.h"

#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "tbix/analysis.hpp"
#include "tbix/container.hpp"
#include "tbix/engine.hpp"
#include "tbix/selftest.hpp"

struct tbix_index {
    tbix::IndexBundle bundle;
};

struct tbix_model {
    std::unique_ptr<tbix::MembershipModel> model;
};

struct tbix_result {
    tbix::QueryResult result;
    std::vector<std::string> unknown;
};

namespace {

thread_local std::string g_last_message;
thread_local std::int64_t g_last_offset = -1;

void clear_error()
{
    g_last_message.clear();
    g_last_offset = -1;
}

auto to_status(tbix::ErrorCode code) -> tbix_status
{
    using tbix::ErrorCode;
    switch (code) {
    case ErrorCode::kInvalidArgument: return TBIX_ERR_INVALID_ARGUMENT;
    case ErrorCode::kEmptyCorpus: return TBIX_ERR_EMPTY_CORPUS;
    case ErrorCode::kEncoding: return TBIX_ERR_ENCODING;
    case ErrorCode::kIo: return TBIX_ERR_IO;
    case ErrorCode::kFormat: return TBIX_ERR_FORMAT;
    case ErrorCode::kDecode: return TBIX_ERR_DECODE;
    case ErrorCode::kEmptyQuery: return TBIX_ERR_EMPTY_QUERY;
    case ErrorCode::kUnknownTerms: return TBIX_ERR_UNKNOWN_TERMS;
    case ErrorCode::kScope: return TBIX_ERR_SCOPE;
    case ErrorCode::kState: return TBIX_ERR_STATE;
    }
    return TBIX_ERR_INTERNAL;
}

auto fail(tbix_status status, std::string message) -> tbix_status
{
    g_last_message = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Fn>
auto guarded(Fn&& body) -> tbix_status
{
    clear_error();
    try {
        body();
        return TBIX_OK;
    } catch (const tbix::FormatError& e) {
        g_last_offset = static_cast<std::int64_t>(e.offset());
        return fail(TBIX_ERR_FORMAT, e.what());
    } catch (const tbix::EncodingError& e) {
        g_last_offset = static_cast<std::int64_t>(e.byte_offset());
        return fail(TBIX_ERR_ENCODING, e.what());
    } catch (const tbix::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TBIX_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TBIX_ERR_INTERNAL, e.what());
    }
}

auto require(bool cond, const char* what) -> void
{
    if (!cond) {
        throw tbix::Error(tbix::ErrorCode::kInvalidArgument, what);
    }
}

auto from_corpus(const tbix::Corpus& corpus) -> std::unique_ptr<tbix_index>
{
    auto h = std::make_unique<tbix_index>();
    h->bundle.index = tbix::build_index(corpus);
    h->bundle.vocabulary = corpus.vocabulary();
    return h;
}

auto parse_lenient(std::string_view text, const tbix::Vocabulary& vocab) -> tbix::Query
{
    try {
        return tbix::parse_query(text, vocab);
    } catch (const tbix::UnknownTermsError& e) {
        return tbix::Query{{}, e.tokens()};
    }
}

auto vocabulary_of(const tbix_index* index) -> const tbix::Vocabulary&
{
    if (!index->bundle.vocabulary) {
        throw tbix::Error(tbix::ErrorCode::kState, "index file carries no vocabulary section");
    }
    return *index->bundle.vocabulary;
}

}  // namespace

extern "C" {

const char* tbix_status_name(tbix_status status)
{
    switch (status) {
    case TBIX_OK: return "ok";
    case TBIX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TBIX_ERR_EMPTY_CORPUS: return "empty corpus";
    case TBIX_ERR_ENCODING: return "invalid text encoding";
    case TBIX_ERR_IO: return "i/o error";
    case TBIX_ERR_FORMAT: return "malformed index file";
    case TBIX_ERR_DECODE: return "postings decode error";
    case TBIX_ERR_EMPTY_QUERY: return "empty query";
    case TBIX_ERR_UNKNOWN_TERMS: return "unknown query terms";
    case TBIX_ERR_SCOPE: return "term outside model scope";
    case TBIX_ERR_STATE: return "missing index section";
    case TBIX_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tbix_last_error_message(void) { return g_last_message.c_str(); }

int64_t tbix_last_error_offset(void) { return g_last_offset; }

tbix_status tbix_index_build(const char* corpus_path, tbix_index** out)
{
    return guarded([&] {
        require(corpus_path != nullptr && out != nullptr, "null argument");
        std::ifstream in(corpus_path, std::ios::binary);
        if (!in) {
            throw tbix::Error(tbix::ErrorCode::kIo,
                              std::string(corpus_path) + ": cannot open for reading");
        }
        *out = from_corpus(tbix::ingest(in)).release();
    });
}

tbix_status tbix_index_build_from_text(const char* text, size_t length, tbix_index** out)
{
    return guarded([&] {
        require((text != nullptr || length == 0) && out != nullptr, "null argument");
        *out = from_corpus(tbix::ingest_text(std::string_view(text ? text : "", length))).release();
    });
}

tbix_status tbix_index_load(const char* path, tbix_index** out)
{
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        auto h = std::make_unique<tbix_index>();
        h->bundle = tbix::load_bundle(path);
        *out = h.release();
    });
}

tbix_status tbix_index_save(const tbix_index* index, const char* path)
{
    return guarded([&] {
        require(index != nullptr && path != nullptr, "null argument");
        tbix::save_bundle(index->bundle, path);
    });
}

void tbix_index_free(tbix_index* index) { delete index; }

tbix_status tbix_index_get_info(const tbix_index* index, tbix_index_info* out)
{
    return guarded([&] {
        require(index != nullptr && out != nullptr, "null argument");
        const auto& b = index->bundle;
        *out = tbix_index_info{};
        out->doc_count = b.index.doc_count();
        out->term_count = b.index.term_count();
        out->max_df = b.index.max_df();
        out->total_bits = b.index.total_bits();
        out->has_vocabulary = b.vocabulary.has_value();
        out->has_tier = b.tiered.has_value();
        if (b.tiered) {
            out->k = b.tiered->k();
            out->replaced_count = b.tiered->replaced_count();
        }
        out->has_blocks = b.blocks.has_value();
        if (b.blocks) {
            out->beta = b.blocks->beta();
            out->hybrid_threshold = b.blocks->hybrid_threshold();
        }
    });
}

tbix_status tbix_index_build_tier(tbix_index* index, uint32_t k)
{
    return guarded([&] {
        require(index != nullptr, "null argument");
        index->bundle.tiered = tbix::build_tiered(index->bundle.index, k);
    });
}

tbix_status tbix_index_build_blocks(tbix_index* index, uint32_t beta, uint32_t hybrid_threshold)
{
    return guarded([&] {
        require(index != nullptr, "null argument");
        index->bundle.blocks = tbix::build_blocks(index->bundle.index, beta, hybrid_threshold);
    });
}

tbix_status tbix_model_create(const tbix_index* index, tbix_model_kind kind, tbix_strategy strategy,
                              uint32_t bits_per_pair, tbix_model** out)
{
    return guarded([&] {
        require(index != nullptr && out != nullptr, "null argument");
        const auto& b = index->bundle;
        const auto term_count = b.index.term_count();
        tbix::ModelScope scope = tbix::ModelScope::all(term_count);
        if (strategy == TBIX_STRATEGY_TIERED) {
            if (!b.tiered) {
                throw tbix::Error(tbix::ErrorCode::kState, "index has no tier section");
            }
            auto replaced = tbix::replaced_set(*b.tiered);
            scope = tbix::ModelScope::of(term_count, replaced);
        } else if (strategy == TBIX_STRATEGY_BLOCK) {
            if (!b.blocks) {
                throw tbix::Error(tbix::ErrorCode::kState, "index has no block section");
            }
            std::vector<tbix::TermId> terms;
            for (tbix::TermId t = 0; t < term_count; ++t) {
                if (b.blocks->hybrid_list(t) == nullptr) {
                    terms.push_back(t);
                }
            }
            scope = tbix::ModelScope::of(term_count, terms);
        } else {
            require(strategy == TBIX_STRATEGY_EXHAUSTIVE || strategy == TBIX_STRATEGY_ORACLE,
                    "unknown strategy");
        }
        auto h = std::make_unique<tbix_model>();
        switch (kind) {
        case TBIX_MODEL_EXACT: h->model = tbix::build_exact_model(b.index, scope); break;
        case TBIX_MODEL_BLOOM:
            h->model = tbix::build_bloom_model(b.index, scope, bits_per_pair);
            break;
        default: require(false, "unknown model kind");
        }
        *out = h.release();
    });
}

void tbix_model_free(tbix_model* model) { delete model; }

int tbix_model_is_exact(const tbix_model* model) { return model && model->model->exact() ? 1 : 0; }

tbix_status tbix_query_run(const tbix_index* index, const tbix_model* model, tbix_strategy strategy,
                           int fallback, const char* query_text, tbix_result** out)
{
    return guarded([&] {
        require(index != nullptr && query_text != nullptr && out != nullptr, "null argument");
        require(fallback == 0 || strategy == TBIX_STRATEGY_TIERED,
                "fallback only applies to the tiered strategy");
        require(strategy == TBIX_STRATEGY_ORACLE || model != nullptr,
                "strategy needs a membership model");
        const auto& b = index->bundle;
        auto query = parse_lenient(query_text, vocabulary_of(index));
        auto h = std::make_unique<tbix_result>();
        switch (strategy) {
        case TBIX_STRATEGY_EXHAUSTIVE:
            h->result = tbix::query_exhaustive(query, *model->model, b.index.doc_count());
            break;
        case TBIX_STRATEGY_TIERED:
            if (!b.tiered) {
                throw tbix::Error(tbix::ErrorCode::kState, "index has no tier section");
            }
            h->result = tbix::query_tiered(query, *b.tiered, *model->model, fallback != 0);
            break;
        case TBIX_STRATEGY_BLOCK:
            if (!b.blocks) {
                throw tbix::Error(tbix::ErrorCode::kState, "index has no block section");
            }
            h->result = tbix::query_block(query, *b.blocks, *model->model);
            break;
        case TBIX_STRATEGY_ORACLE: h->result = tbix::query_oracle(query, b.index); break;
        default: require(false, "unknown strategy");
        }
        h->unknown = std::move(query.unknown);
        *out = h.release();
    });
}

size_t tbix_result_size(const tbix_result* result) { return result ? result->result.doc_ids.size() : 0; }

const uint32_t* tbix_result_docs(const tbix_result* result)
{
    return result ? result->result.doc_ids.data() : nullptr;
}

void tbix_result_get_stats(const tbix_result* result, tbix_result_stats* out)
{
    if (result == nullptr || out == nullptr) {
        return;
    }
    const auto& r = result->result;
    out->candidates_scanned = r.candidates_scanned;
    out->model_probes = r.model_probes;
    out->guaranteed = r.guaranteed ? 1 : 0;
    out->used_fallback = r.used_fallback ? 1 : 0;
    out->unknown_count = result->unknown.size();
}

const char* tbix_result_unknown_token(const tbix_result* result, size_t i)
{
    if (result == nullptr || i >= result->unknown.size()) {
        return nullptr;
    }
    return result->unknown[i].c_str();
}

void tbix_result_free(tbix_result* result) { delete result; }

tbix_status tbix_df_histogram(const tbix_index* index, tbix_df_bucket* out, size_t capacity,
                              size_t* count)
{
    return guarded([&] {
        require(index != nullptr && count != nullptr, "null argument");
        auto hist = tbix::df_histogram(index->bundle.index);
        *count = hist.size();
        if (out == nullptr) {
            return;
        }
        require(capacity >= hist.size(), "histogram buffer too small");
        std::size_t i = 0;
        for (auto [df, n] : hist) {
            out[i++] = tbix_df_bucket{df, n};
        }
    });
}

tbix_status tbix_storage_fraction_curve(const tbix_index* index, const double* fractions,
                                        size_t count, uint32_t* min_terms)
{
    return guarded([&] {
        require(index != nullptr && (count == 0 || (fractions && min_terms)), "null argument");
        auto curve = tbix::storage_fraction_curve(index->bundle.index,
                                                  std::span<const double>(fractions, count));
        std::copy(curve.begin(), curve.end(), min_terms);
    });
}

tbix_status tbix_gain(const tbix_index* index, uint32_t k, const double* s_values, size_t s_count,
                      tbix_gain_row* row, double* gains)
{
    return guarded([&] {
        require(index != nullptr && row != nullptr && (s_count == 0 || (s_values && gains)),
                "null argument");
        const auto& idx = index->bundle.index;
        std::uint32_t ks[] = {k};
        auto report = tbix::gain_bounds_sweep(idx, ks).front();
        *row = tbix_gain_row{};
        row->k = k;
        row->replaced = report.replaced_count;
        row->trunc_bits = report.trunc_list_size_bits;
        row->trunc_extrapolated = report.trunc_extrapolated ? 1 : 0;
        row->has_measured_trunc_bits = report.measured_trunc_bits.has_value() ? 1 : 0;
        row->measured_trunc_bits = report.measured_trunc_bits.value_or(0.0);
        for (std::size_t i = 0; i < s_count; ++i) {
            gains[i] = tbix::gain(idx, k, s_values[i]);
        }
    });
}

tbix_status tbix_guarantees(const tbix_index* index, const char* const* queries, size_t query_count,
                            uint32_t k, tbix_guarantee_row* out)
{
    return guarded([&] {
        require(index != nullptr && out != nullptr && (query_count == 0 || queries), "null argument");
        const auto& vocab = vocabulary_of(index);
        std::vector<tbix::Query> parsed;
        for (std::size_t i = 0; i < query_count; ++i) {
            require(queries[i] != nullptr, "null query");
            try {
                parsed.push_back(parse_lenient(queries[i], vocab));
            } catch (const tbix::Error& e) {
                if (e.code() != tbix::ErrorCode::kEmptyQuery) {
                    throw;
                }
            }
        }
        auto rep = tbix::guarantee_percentages(parsed, index->bundle.index, k);
        *out = tbix_guarantee_row{rep.k, rep.query_count, rep.pct_with_model, rep.pct_without_model};
    });
}

tbix_status tbix_selftest(tbix_selftest_callback callback, void* user_data, uint32_t* failures)
{
    return guarded([&] {
        std::uint32_t failed = 0;
        for (const auto& c : tbix::run_selftest()) {
            failed += c.passed ? 0 : 1;
            if (callback != nullptr) {
                callback(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user_data);
            }
        }
        if (failures != nullptr) {
            *failures = failed;
        }
    });
}

}  // extern "C"
