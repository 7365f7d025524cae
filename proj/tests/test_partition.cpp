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

#include <doctest.h>

#include <random>

#include "tbix/partition.hpp"
#include "test_support.hpp"

using namespace tbix;

namespace {
const char* kCorpusA = "the cat sat\nthe dog sat\na cat ran\n";

auto ids(const PostingsList& l) { return std::vector<DocId>(l.begin(), l.end()); }
auto blocks_of(const BlockIndex& b, TermId t)
{
    return std::vector<std::uint32_t>(b.block_list(t).begin(), b.block_list(t).end());
}
}  // namespace

TEST_CASE("tiered split of the fixture at k = 1")
{
    auto index = build_index(ingest_text(kCorpusA));
    auto tiered = build_tiered(index, 1);
    const std::vector<std::vector<DocId>> tier1{{2}, {0}, {1}, {2}, {0}, {0}};
    const std::vector<std::vector<DocId>> tier2{{}, {2}, {}, {}, {1}, {1}};
    for (TermId t = 0; t < 6; ++t) {
        CHECK(ids(tiered.tier1(t)) == tier1[t]);
        CHECK(ids(tiered.tier2(t)) == tier2[t]);
    }
    CHECK(replaced_set(tiered) == std::vector<TermId>{1, 4, 5});
    CHECK(tiered.replaced_count() == 3);
    CHECK(tiered.replaced_flag_bits() == 6);
    CHECK(tiered.k() == 1);
    CHECK(tiered.policy() == TruncationPolicy::kLowestDocIds);
}

TEST_CASE("no term is replaced once k reaches the longest list")
{
    auto index = build_index(ingest_text(kCorpusA));
    auto tiered = build_tiered(index, 2);
    for (TermId t = 0; t < 6; ++t) {
        CHECK(tiered.tier2(t).empty());
    }
    CHECK(replaced_set(tiered).empty());
    CHECK(replaced_set(build_tiered(index, 1000)).empty());
    auto singles = build_index(ingest_text("a\nb\nc\n"));
    CHECK(replaced_set(build_tiered(singles, 1)).empty());
}

TEST_CASE("tiered rejects k = 0 and inconsistent parts")
{
    auto index = build_index(ingest_text(kCorpusA));
    CHECK_THROWS_AS((void)build_tiered(index, 0), Error);
    std::vector<PostingsList> t1{PostingsList({0, 1})};
    std::vector<PostingsList> t2{PostingsList({2})};
    CHECK_THROWS_AS(TieredIndex(1, TruncationPolicy::kLowestDocIds, t1, t2), Error);
    std::vector<PostingsList> t1b{PostingsList({3})};
    std::vector<PostingsList> t2b{PostingsList({2})};
    CHECK_THROWS_AS(TieredIndex(1, TruncationPolicy::kLowestDocIds, t1b, t2b), Error);
}

TEST_CASE("tiers reconstruct the postings and |R| shrinks with k")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto index = build_index(ingest_text(testing::random_small_corpus(rng, 100, 15)));
        std::size_t prev_r = index.term_count() + 1;
        for (std::uint32_t k = 1; k <= index.max_df() + 1; ++k) {
            auto tiered = build_tiered(index, k);
            for (TermId t = 0; t < index.term_count(); ++t) {
                auto joined = ids(tiered.tier1(t));
                auto rest = ids(tiered.tier2(t));
                joined.insert(joined.end(), rest.begin(), rest.end());
                std::sort(joined.begin(), joined.end());
                REQUIRE(joined == ids(index.decode(t)));
                CHECK(tiered.tier1(t).size() == std::min<std::size_t>(index.df(t), k));
                CHECK(tiered.replaced(t) == (index.df(t) > k));
            }
            auto r = replaced_set(tiered).size();
            CHECK(r <= prev_r);
            prev_r = r;
        }
        CHECK(prev_r == 0);
    }
}

TEST_CASE("block lists of the fixture at beta = 2")
{
    auto index = build_index(ingest_text(kCorpusA));
    auto blocks = build_blocks(index, 2);
    CHECK(blocks.block_count() == 2);
    CHECK(blocks.block_range(0) == std::pair<DocId, DocId>{0, 2});
    CHECK(blocks.block_range(1) == std::pair<DocId, DocId>{2, 3});
    const std::vector<std::vector<std::uint32_t>> expected{{1}, {0, 1}, {0}, {1}, {0}, {0}};
    for (TermId t = 0; t < 6; ++t) {
        CHECK(blocks_of(blocks, t) == expected[t]);
        CHECK(blocks.hybrid_list(t) == nullptr);
    }
}

TEST_CASE("degenerate block widths")
{
    std::mt19937_64 rng(13);
    auto index = build_index(ingest_text(testing::random_small_corpus(rng, 50, 10)));
    auto singletons = build_blocks(index, 1);
    auto whole = build_blocks(index, index.doc_count());
    auto wider = build_blocks(index, index.doc_count() + 7);
    for (TermId t = 0; t < index.term_count(); ++t) {
        auto list = ids(index.decode(t));
        CHECK(blocks_of(singletons, t) == std::vector<std::uint32_t>(list.begin(), list.end()));
        CHECK(blocks_of(whole, t) == std::vector<std::uint32_t>{0});
        CHECK(blocks_of(wider, t) == std::vector<std::uint32_t>{0});
    }
    CHECK(wider.block_range(0) == std::pair<DocId, DocId>{0, index.doc_count()});
    CHECK_THROWS_AS((void)build_blocks(index, 0), Error);
}

TEST_CASE("hybrid threshold keeps exact lists for rare terms")
{
    auto index = build_index(ingest_text(kCorpusA));
    auto blocks = build_blocks(index, 2, 1);
    CHECK(blocks.hybrid_threshold() == 1);
    for (TermId t = 0; t < 6; ++t) {
        const auto* exact = blocks.hybrid_list(t);
        if (index.df(t) <= 1) {
            REQUIRE(exact != nullptr);
            CHECK(*exact == index.decode(t));
        } else {
            CHECK(exact == nullptr);
        }
    }
}

TEST_CASE("every posting's block appears in its term's block list")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto index = build_index(ingest_text(testing::random_small_corpus(rng, 120, 20)));
        for (std::uint32_t beta : {1u, 2u, 3u, 7u, 16u, 1000u}) {
            auto blocks = build_blocks(index, beta);
            for (TermId t = 0; t < index.term_count(); ++t) {
                auto bl = blocks.block_list(t);
                std::vector<std::uint32_t> expected;
                for (DocId d : index.decode(t)) {
                    REQUIRE(std::binary_search(bl.begin(), bl.end(), d / beta));
                    expected.push_back(d / beta);
                }
                expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
                CHECK(blocks_of(blocks, t) == expected);
            }
        }
    }
}
