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

#include "tbix/index.hpp"

#include <algorithm>

namespace tbix {

InvertedIndex::InvertedIndex(std::uint32_t doc_count, std::vector<CompressedPostings> postings)
    : doc_count_(doc_count), postings_(std::move(postings))
{
    for (std::size_t t = 0; t < postings_.size(); ++t) {
        const auto& p = postings_[t];
        if (p.df == 0 || p.df > doc_count_) {
            throw Error(ErrorCode::kInvalidArgument,
                        "term " + std::to_string(t) + " has document frequency "
                            + std::to_string(p.df) + " outside [1, " + std::to_string(doc_count_)
                            + "]");
        }
        total_bits_ += p.size_bits();
        max_df_ = std::max(max_df_, p.df);
    }
}

auto InvertedIndex::decode(TermId t) const -> PostingsList
{
    auto list = vbyte_codec().decode(postings(t));
    if (!list.empty() && list.ids().back() >= doc_count_) {
        throw Error(ErrorCode::kDecode, "term " + std::to_string(t) + " references document "
                                            + std::to_string(list.ids().back()) + " >= |D|");
    }
    return list;
}

auto build_index(const Corpus& corpus, const PostingsCodec& codec) -> InvertedIndex
{
    std::vector<std::vector<DocId>> lists(corpus.term_count());
    const auto& docs = corpus.documents();
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (TermId t : docs[d]) {
            auto& list = lists[t];
            // Documents arrive in order, so a repeat of d can only sit at the back.
            if (list.empty() || list.back() != d) {
                list.push_back(static_cast<DocId>(d));
            }
        }
    }
    std::vector<CompressedPostings> postings;
    postings.reserve(lists.size());
    for (const auto& list : lists) {
        postings.push_back(codec.encode(list));
    }
    return InvertedIndex(static_cast<std::uint32_t>(corpus.doc_count()), std::move(postings));
}

auto intersect(std::span<const PostingsList> lists) -> PostingsList
{
    if (lists.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "intersect needs at least one list");
    }
    std::vector<const PostingsList*> order;
    order.reserve(lists.size());
    for (const auto& l : lists) {
        order.push_back(&l);
    }
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return a->size() < b->size(); });

    std::vector<DocId> acc(order.front()->begin(), order.front()->end());
    for (std::size_t i = 1; i < order.size() && !acc.empty(); ++i) {
        auto other = order[i]->ids();
        auto it = other.begin();
        std::size_t kept = 0;
        for (DocId d : acc) {
            it = std::lower_bound(it, other.end(), d);
            if (it == other.end()) {
                break;
            }
            if (*it == d) {
                acc[kept++] = d;
            }
        }
        acc.resize(kept);
    }
    return PostingsList(std::move(acc));
}

}  // namespace tbix
