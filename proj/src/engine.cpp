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

#include "tbix/engine.hpp"

#include <algorithm>

namespace tbix {

namespace {

void require_terms(const Query& q, std::uint32_t term_count)
{
    if (q.terms.empty() && q.unknown.empty()) {
        throw Error(ErrorCode::kEmptyQuery, "query has no terms");
    }
    for (TermId t : q.terms) {
        if (t >= term_count) {
            throw Error(ErrorCode::kInvalidArgument,
                        "query term id " + std::to_string(t) + " outside vocabulary");
        }
    }
}

void require_scope(TermId t, const MembershipModel& model)
{
    if (!model.scope().contains(t)) {
        throw ScopeError(t);
    }
}

auto unknown_result() -> QueryResult
{
    QueryResult r;
    r.unknown_terms = true;
    r.guaranteed = true;
    return r;
}

// Sorted union of sorted inputs.
auto merge_union(std::vector<DocId> acc, std::span<const DocId> more) -> std::vector<DocId>
{
    std::vector<DocId> out;
    out.reserve(acc.size() + more.size());
    std::set_union(acc.begin(), acc.end(), more.begin(), more.end(), std::back_inserter(out));
    return out;
}

// Per-term check: either an exact list or a model probe.
struct TermCheck {
    TermId term;
    const PostingsList* list;  // nullptr -> ask the model
};

auto accepts(std::span<const TermCheck> checks, DocId d, const MembershipModel& model,
             std::uint64_t& probes) -> bool
{
    for (const auto& c : checks) {
        bool hit = false;
        if (c.list != nullptr) {
            hit = c.list->contains(d);
        } else {
            ++probes;
            hit = model.contains(c.term, d);
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

}  // namespace

auto query_exhaustive(const Query& q, const MembershipModel& model, std::uint32_t doc_count)
    -> QueryResult
{
    require_terms(q, model.scope().term_count());
    if (!q.unknown.empty()) {
        return unknown_result();
    }
    std::vector<TermCheck> checks;
    for (TermId t : q.terms) {
        require_scope(t, model);
        checks.push_back({t, nullptr});
    }
    QueryResult r;
    for (DocId d = 0; d < doc_count; ++d) {
        if (accepts(checks, d, model, r.model_probes)) {
            r.doc_ids.push_back(d);
        }
    }
    r.candidates_scanned = doc_count;
    r.guaranteed = model.exact();
    return r;
}

auto query_tiered(const Query& q, const TieredIndex& tiered, const MembershipModel& model,
                  bool fallback) -> QueryResult
{
    require_terms(q, tiered.term_count());
    if (!q.unknown.empty()) {
        return unknown_result();
    }
    std::vector<TermCheck> checks;
    std::vector<TermCheck> model_checks;
    bool guaranteed = false;
    std::vector<DocId> candidates;
    for (TermId t : q.terms) {
        if (tiered.replaced(t)) {
            require_scope(t, model);
            model_checks.push_back({t, nullptr});
        } else {
            guaranteed = true;
            checks.push_back({t, &tiered.tier1(t)});
        }
        candidates = merge_union(std::move(candidates), tiered.tier1(t).ids());
    }
    // Exact list lookups first; they are cheaper than model probes.
    checks.insert(checks.end(), model_checks.begin(), model_checks.end());

    QueryResult r;
    r.guaranteed = guaranteed;
    if (fallback && !guaranteed) {
        for (TermId t : q.terms) {
            candidates = merge_union(std::move(candidates), tiered.tier2(t).ids());
        }
        r.used_fallback = true;
    }
    for (DocId d : candidates) {
        if (accepts(checks, d, model, r.model_probes)) {
            r.doc_ids.push_back(d);
        }
    }
    r.candidates_scanned = candidates.size();
    return r;
}

auto query_block(const Query& q, const BlockIndex& blocks, const MembershipModel& model)
    -> QueryResult
{
    require_terms(q, blocks.term_count());
    if (!q.unknown.empty()) {
        return unknown_result();
    }
    std::vector<TermCheck> checks;
    std::vector<TermCheck> model_checks;
    for (TermId t : q.terms) {
        if (const auto* exact = blocks.hybrid_list(t)) {
            checks.push_back({t, exact});
        } else {
            require_scope(t, model);
            model_checks.push_back({t, nullptr});
        }
    }
    checks.insert(checks.end(), model_checks.begin(), model_checks.end());

    std::vector<std::uint32_t> shared(blocks.block_list(q.terms.front()).begin(),
                                      blocks.block_list(q.terms.front()).end());
    for (std::size_t i = 1; i < q.terms.size() && !shared.empty(); ++i) {
        auto other = blocks.block_list(q.terms[i]);
        std::vector<std::uint32_t> next;
        std::set_intersection(shared.begin(), shared.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        shared = std::move(next);
    }

    QueryResult r;
    for (std::uint32_t b : shared) {
        auto [first, last] = blocks.block_range(b);
        for (DocId d = first; d < last; ++d) {
            if (accepts(checks, d, model, r.model_probes)) {
                r.doc_ids.push_back(d);
            }
        }
        r.candidates_scanned += last - first;
    }
    r.guaranteed = model.exact() || model_checks.empty();
    return r;
}

auto query_oracle(const Query& q, const InvertedIndex& index) -> QueryResult
{
    require_terms(q, index.term_count());
    if (!q.unknown.empty()) {
        return unknown_result();
    }
    std::vector<PostingsList> lists;
    QueryResult r;
    for (TermId t : q.terms) {
        lists.push_back(index.decode(t));
        r.candidates_scanned += lists.back().size();
    }
    auto hits = intersect(lists);
    r.doc_ids.assign(hits.begin(), hits.end());
    r.guaranteed = true;
    return r;
}

}  // namespace tbix
