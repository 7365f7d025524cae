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

#pragma once

// Synthetic collections and brute-force reference implementations shared by
// the unit and acceptance tests. Nothing here goes through the index,
// codec or model code paths it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tbix/corpus.hpp"
#include "tbix/index.hpp"

namespace tbix::testing {

struct ZipfCorpusSpec {
    std::uint32_t docs = 20000;
    std::uint32_t ranks = 40000;  // vocabulary drawn from
    double exponent = 1.0;
    std::uint32_t min_len = 50;
    std::uint32_t max_len = 500;
    std::uint64_t seed = 42;
};

/// One document per line; token for rank r is "t<r>".
[[nodiscard]] auto generate_zipf_corpus(const ZipfCorpusSpec& spec) -> std::string;

/// Conjunctive queries of `min_terms`..`max_terms` distinct terms. Half draw
/// terms uniformly from the vocabulary, half draw distinct terms of one random
/// document (so they usually have results).
[[nodiscard]] auto generate_queries(const Corpus& corpus, std::uint32_t count, std::uint32_t min_terms,
                                    std::uint32_t max_terms, std::uint64_t seed)
    -> std::vector<std::string>;

/// Sorted ids of documents containing every term, by scanning token lists.
[[nodiscard]] auto brute_force_conjunction(const Corpus& corpus, const std::vector<TermId>& terms)
    -> std::vector<DocId>;

/// Whether document `d` contains term `t`, by scanning its tokens.
[[nodiscard]] auto brute_force_contains(const Corpus& corpus, TermId t, DocId d) -> bool;

/// Reference vbyte encoder written straight from the format definition.
[[nodiscard]] auto reference_vbyte(const std::vector<DocId>& ids) -> std::vector<std::uint8_t>;

/// Storage gain recomputed from scratch: every list is decoded, re-encoded
/// with reference_vbyte, and the truncated-list estimate is rebuilt from
/// those sizes.
[[nodiscard]] auto brute_force_gain(const InvertedIndex& index, std::uint32_t k, double s) -> double;

/// Small random corpus over a tiny alphabet so that conjunctions hit often.
[[nodiscard]] auto random_small_corpus(std::mt19937_64& rng, std::uint32_t max_docs = 60,
                                       std::uint32_t alphabet = 12) -> std::string;

/// Random 1..max_terms term query (distinct ids) over a vocabulary.
[[nodiscard]] auto random_query(std::mt19937_64& rng, std::uint32_t term_count, std::uint32_t max_terms)
    -> Query;

}  // namespace tbix::testing
