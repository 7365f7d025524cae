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

#include "tbix/partition.hpp"

#include <algorithm>

namespace tbix {

TieredIndex::TieredIndex(std::uint32_t k, TruncationPolicy policy, std::vector<PostingsList> tier1,
                         std::vector<PostingsList> tier2)
    : k_(k), policy_(policy), tier1_(std::move(tier1)), tier2_(std::move(tier2))
{
    if (k_ == 0) {
        throw Error(ErrorCode::kInvalidArgument, "truncation length k must be >= 1");
    }
    if (tier1_.size() != tier2_.size()) {
        throw Error(ErrorCode::kInvalidArgument, "tier sizes differ");
    }
    for (std::size_t t = 0; t < tier1_.size(); ++t) {
        const auto& a = tier1_[t];
        const auto& b = tier2_[t];
        bool ok = a.size() == std::min<std::size_t>(a.size() + b.size(), k_) && !a.empty();
        if (ok && !b.empty()) {
            // Both halves are sorted; under the lowest-ids policy tier 2 starts
            // after tier 1 ends, which also makes them disjoint.
            ok = a.ids().back() < b.ids().front();
        }
        if (!ok) {
            throw Error(ErrorCode::kInvalidArgument,
                        "inconsistent tiers for term " + std::to_string(t));
        }
        if (!b.empty()) {
            ++replaced_count_;
        }
    }
}

auto build_tiered(const InvertedIndex& index, std::uint32_t k, TruncationPolicy policy)
    -> TieredIndex
{
    if (k == 0) {
        throw Error(ErrorCode::kInvalidArgument, "truncation length k must be >= 1");
    }
    std::vector<PostingsList> tier1;
    std::vector<PostingsList> tier2;
    tier1.reserve(index.term_count());
    tier2.reserve(index.term_count());
    for (TermId t = 0; t < index.term_count(); ++t) {
        auto full = index.decode(t);
        auto ids = full.ids();
        auto cut = std::min<std::size_t>(ids.size(), k);
        tier1.emplace_back(std::vector<DocId>(ids.begin(), ids.begin() + cut));
        tier2.emplace_back(std::vector<DocId>(ids.begin() + cut, ids.end()));
    }
    return TieredIndex(k, policy, std::move(tier1), std::move(tier2));
}

auto replaced_set(const TieredIndex& tiered) -> std::vector<TermId>
{
    std::vector<TermId> out;
    for (TermId t = 0; t < tiered.term_count(); ++t) {
        if (tiered.replaced(t)) {
            out.push_back(t);
        }
    }
    return out;
}

BlockIndex::BlockIndex(std::uint32_t beta, std::uint32_t doc_count, std::uint32_t hybrid_threshold,
                       std::vector<std::vector<std::uint32_t>> block_lists,
                       std::vector<PostingsList> hybrid_lists)
    : beta_(beta),
      doc_count_(doc_count),
      hybrid_threshold_(hybrid_threshold),
      block_lists_(std::move(block_lists)),
      hybrid_lists_(std::move(hybrid_lists))
{
    if (beta_ == 0) {
        throw Error(ErrorCode::kInvalidArgument, "block width beta must be >= 1");
    }
    if (hybrid_lists_.size() != block_lists_.size()) {
        throw Error(ErrorCode::kInvalidArgument, "hybrid and block list counts differ");
    }
    for (std::size_t t = 0; t < block_lists_.size(); ++t) {
        const auto& bl = block_lists_[t];
        bool ok = !bl.empty() && std::adjacent_find(bl.begin(), bl.end(), std::greater_equal<>())
                                     == bl.end();
        ok = ok && bl.back() < block_count();
        if (!ok) {
            throw Error(ErrorCode::kInvalidArgument,
                        "invalid block list for term " + std::to_string(t));
        }
    }
}

auto BlockIndex::hybrid_list(TermId t) const -> const PostingsList*
{
    const auto& l = hybrid_lists_.at(t);
    return l.empty() ? nullptr : &l;
}

auto BlockIndex::block_range(std::uint32_t b) const -> std::pair<DocId, DocId>
{
    auto first = static_cast<std::uint64_t>(b) * beta_;
    auto last = std::min<std::uint64_t>(first + beta_, doc_count_);
    first = std::min<std::uint64_t>(first, doc_count_);
    return {static_cast<DocId>(first), static_cast<DocId>(last)};
}

auto build_blocks(const InvertedIndex& index, std::uint32_t beta, std::uint32_t hybrid_threshold)
    -> BlockIndex
{
    if (beta == 0) {
        throw Error(ErrorCode::kInvalidArgument, "block width beta must be >= 1");
    }
    std::vector<std::vector<std::uint32_t>> block_lists;
    std::vector<PostingsList> hybrid;
    block_lists.reserve(index.term_count());
    hybrid.reserve(index.term_count());
    for (TermId t = 0; t < index.term_count(); ++t) {
        auto list = index.decode(t);
        std::vector<std::uint32_t> blocks;
        for (DocId d : list) {
            std::uint32_t b = d / beta;
            if (blocks.empty() || blocks.back() != b) {
                blocks.push_back(b);
            }
        }
        block_lists.push_back(std::move(blocks));
        hybrid.push_back(list.size() <= hybrid_threshold ? std::move(list) : PostingsList{});
    }
    return BlockIndex(beta, index.doc_count(), hybrid_threshold, std::move(block_lists),
                      std::move(hybrid));
}

}  // namespace tbix
