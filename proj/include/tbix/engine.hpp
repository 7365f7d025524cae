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

#include <cstdint>
#include <vector>

#include "tbix/corpus.hpp"
#include "tbix/index.hpp"
#include "tbix/membership.hpp"
#include "tbix/partition.hpp"

namespace tbix {

struct QueryResult {
    std::vector<DocId> doc_ids;           // sorted, duplicate-free
    std::uint64_t candidates_scanned = 0;
    std::uint64_t model_probes = 0;
    // Tiered: at least one query term keeps its full list in tier 1.
    // Other strategies: the result is exact (exact model, or the oracle).
    bool guaranteed = false;
    bool used_fallback = false;
    bool unknown_terms = false;           // short-circuited to the empty result

    friend auto operator==(const QueryResult&, const QueryResult&) -> bool = default;
};

// Every strategy returns the empty result, flagged unknown_terms, when the
// query carries unknown tokens. Term ids must be < the index term count and
// the model must cover every term it is asked about (ScopeError otherwise).

/// Scans every document and keeps those for which the model accepts all terms.
[[nodiscard]] auto query_exhaustive(const Query& q, const MembershipModel& model,
                                    std::uint32_t doc_count) -> QueryResult;

/// Scans the union of the terms' tier-1 lists. Non-replaced terms are checked
/// against their (complete) tier-1 list, replaced ones through the model. With
/// `fallback`, a non-guaranteed query also scans the union of tier-2 lists.
[[nodiscard]] auto query_tiered(const Query& q, const TieredIndex& tiered,
                                const MembershipModel& model, bool fallback) -> QueryResult;

/// Scans every document of the blocks shared by all terms. Hybrid terms are
/// checked against their exact lists, the rest through the model.
[[nodiscard]] auto query_block(const Query& q, const BlockIndex& blocks,
                               const MembershipModel& model) -> QueryResult;

/// Exact intersection of the decoded postings. candidates_scanned counts the
/// decoded postings.
[[nodiscard]] auto query_oracle(const Query& q, const InvertedIndex& index) -> QueryResult;

}  // namespace tbix
