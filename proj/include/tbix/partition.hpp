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
#include <span>
#include <utility>
#include <vector>

#include "tbix/index.hpp"

namespace tbix {

/// Which k postings of a long list stay in the first tier.
enum class TruncationPolicy : std::uint32_t {
    kLowestDocIds = 0,
};

/// Two-tier split of an inverted index. Tier 1 holds min(df, k) postings per
/// term; tier 2 holds the remainder. A term is "replaced" when df > k: its
/// full list no longer fits tier 1 and membership must come from the model.
class TieredIndex {
  public:
    TieredIndex() = default;
    /// Validates disjointness, lengths and the k >= 1 precondition.
    TieredIndex(std::uint32_t k, TruncationPolicy policy, std::vector<PostingsList> tier1,
                std::vector<PostingsList> tier2);

    [[nodiscard]] auto k() const noexcept -> std::uint32_t { return k_; }
    [[nodiscard]] auto policy() const noexcept -> TruncationPolicy { return policy_; }
    [[nodiscard]] auto term_count() const noexcept -> std::uint32_t
    {
        return static_cast<std::uint32_t>(tier1_.size());
    }
    [[nodiscard]] auto tier1(TermId t) const -> const PostingsList& { return tier1_.at(t); }
    [[nodiscard]] auto tier2(TermId t) const -> const PostingsList& { return tier2_.at(t); }
    [[nodiscard]] auto df(TermId t) const -> std::uint32_t
    {
        return static_cast<std::uint32_t>(tier1_.at(t).size() + tier2_.at(t).size());
    }
    [[nodiscard]] auto replaced(TermId t) const -> bool { return df(t) > k_; }
    [[nodiscard]] auto replaced_count() const noexcept -> std::uint32_t { return replaced_count_; }
    /// One flag bit per vocabulary term.
    [[nodiscard]] auto replaced_flag_bits() const noexcept -> std::uint64_t { return term_count(); }

    friend auto operator==(const TieredIndex&, const TieredIndex&) -> bool = default;

  private:
    std::uint32_t k_ = 0;
    TruncationPolicy policy_ = TruncationPolicy::kLowestDocIds;
    std::vector<PostingsList> tier1_;
    std::vector<PostingsList> tier2_;
    std::uint32_t replaced_count_ = 0;
};

/// Throws Error(kInvalidArgument) when k == 0.
[[nodiscard]] auto build_tiered(const InvertedIndex& index, std::uint32_t k,
                                TruncationPolicy policy = TruncationPolicy::kLowestDocIds)
    -> TieredIndex;

/// R = {t : df(t) > k}, ascending.
[[nodiscard]] auto replaced_set(const TieredIndex& tiered) -> std::vector<TermId>;

/// Per-term lists of fixed-width document blocks. Block b covers documents
/// [b * beta, min((b + 1) * beta, |D|)). Terms with df <= hybrid_threshold
/// also keep their exact postings.
class BlockIndex {
  public:
    BlockIndex() = default;
    BlockIndex(std::uint32_t beta, std::uint32_t doc_count, std::uint32_t hybrid_threshold,
               std::vector<std::vector<std::uint32_t>> block_lists,
               std::vector<PostingsList> hybrid_lists);

    [[nodiscard]] auto beta() const noexcept -> std::uint32_t { return beta_; }
    [[nodiscard]] auto doc_count() const noexcept -> std::uint32_t { return doc_count_; }
    [[nodiscard]] auto hybrid_threshold() const noexcept -> std::uint32_t { return hybrid_threshold_; }
    [[nodiscard]] auto term_count() const noexcept -> std::uint32_t
    {
        return static_cast<std::uint32_t>(block_lists_.size());
    }
    [[nodiscard]] auto block_count() const noexcept -> std::uint32_t
    {
        return doc_count_ == 0 ? 0 : (doc_count_ - 1) / beta_ + 1;
    }
    [[nodiscard]] auto block_list(TermId t) const -> std::span<const std::uint32_t>
    {
        return block_lists_.at(t);
    }
    /// Exact postings for hybrid terms, nullptr otherwise.
    [[nodiscard]] auto hybrid_list(TermId t) const -> const PostingsList*;
    /// Half-open document range of block `b`.
    [[nodiscard]] auto block_range(std::uint32_t b) const -> std::pair<DocId, DocId>;

    friend auto operator==(const BlockIndex&, const BlockIndex&) -> bool = default;

  private:
    std::uint32_t beta_ = 1;
    std::uint32_t doc_count_ = 0;
    std::uint32_t hybrid_threshold_ = 0;
    std::vector<std::vector<std::uint32_t>> block_lists_;
    std::vector<PostingsList> hybrid_lists_;  // empty list for non-hybrid terms
};

/// Throws Error(kInvalidArgument) when beta == 0. hybrid_threshold == 0
/// disables hybrid lists.
[[nodiscard]] auto build_blocks(const InvertedIndex& index, std::uint32_t beta,
                                std::uint32_t hybrid_threshold = 0) -> BlockIndex;

}  // namespace tbix
