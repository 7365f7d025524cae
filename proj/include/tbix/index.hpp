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
#include <vector>

#include "tbix/codec.hpp"
#include "tbix/corpus.hpp"

namespace tbix {

/// Compressed document-level inverted index. One postings entry per
/// vocabulary term, indexed by TermId.
class InvertedIndex {
  public:
    InvertedIndex() = default;
    /// Throws Error(kInvalidArgument) if any list is empty or if a df exceeds
    /// `doc_count`.
    InvertedIndex(std::uint32_t doc_count, std::vector<CompressedPostings> postings);

    [[nodiscard]] auto doc_count() const noexcept -> std::uint32_t { return doc_count_; }
    [[nodiscard]] auto term_count() const noexcept -> std::uint32_t
    {
        return static_cast<std::uint32_t>(postings_.size());
    }
    [[nodiscard]] auto postings(TermId t) const -> const CompressedPostings& { return postings_.at(t); }
    [[nodiscard]] auto all_postings() const noexcept -> std::span<const CompressedPostings>
    {
        return postings_;
    }
    [[nodiscard]] auto df(TermId t) const -> std::uint32_t { return postings_.at(t).df; }
    [[nodiscard]] auto size_bits(TermId t) const -> std::uint64_t { return postings_.at(t).size_bits(); }
    [[nodiscard]] auto decode(TermId t) const -> PostingsList;
    [[nodiscard]] auto total_bits() const noexcept -> std::uint64_t { return total_bits_; }
    [[nodiscard]] auto max_df() const noexcept -> std::uint32_t { return max_df_; }

    friend auto operator==(const InvertedIndex& a, const InvertedIndex& b) -> bool
    {
        return a.doc_count_ == b.doc_count_ && a.postings_ == b.postings_;
    }

  private:
    std::uint32_t doc_count_ = 0;
    std::vector<CompressedPostings> postings_;
    std::uint64_t total_bits_ = 0;
    std::uint32_t max_df_ = 0;
};

[[nodiscard]] auto build_index(const Corpus& corpus, const PostingsCodec& codec = vbyte_codec())
    -> InvertedIndex;

/// Sorted intersection, evaluated shortest list first. Throws
/// Error(kInvalidArgument) when `lists` is empty.
[[nodiscard]] auto intersect(std::span<const PostingsList> lists) -> PostingsList;

}  // namespace tbix
