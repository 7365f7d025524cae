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

#include "tbix/codec.hpp"
#include "test_support.hpp"

using namespace tbix;

namespace {
using Bytes = std::vector<std::uint8_t>;

auto compressed(Bytes bytes, std::uint32_t df) -> CompressedPostings
{
    return CompressedPostings{std::move(bytes), df};
}

auto random_list(std::mt19937_64& rng, std::size_t n, DocId bound) -> std::vector<DocId>
{
    std::vector<DocId> ids;
    std::uniform_int_distribution<DocId> pick(0, bound - 1);
    while (ids.size() < n) {
        ids.push_back(pick(rng));
        if (ids.size() == n) {
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        }
    }
    return ids;
}
}  // namespace

TEST_CASE("encode known lists")
{
    auto c = encode_postings(PostingsList({3, 7, 15}));
    CHECK(c.bytes == Bytes{0x03, 0x04, 0x08});
    CHECK(c.size_bits() == 24);
    CHECK(c.df == 3);

    CHECK(encode_postings(PostingsList({0})).bytes == Bytes{0x00});
    CHECK(encode_postings(PostingsList({0})).size_bits() == 8);
    CHECK(encode_postings(PostingsList({300})).bytes == Bytes{0xAC, 0x02});
    CHECK(encode_postings(PostingsList({0xFFFFFFFFu})).bytes == Bytes{0xFF, 0xFF, 0xFF, 0xFF, 0x0F});
    CHECK(encode_postings(PostingsList{}).bytes.empty());
}

TEST_CASE("decode known streams")
{
    CHECK(decode_postings(compressed({0x03, 0x04, 0x08}, 3)) == PostingsList({3, 7, 15}));
    CHECK(decode_postings(compressed({0x00}, 1)) == PostingsList({0}));
    CHECK(decode_postings(compressed({0xAC, 0x02}, 1)) == PostingsList({300}));
}

TEST_CASE("decode rejects malformed streams")
{
    auto code_of = [](const CompressedPostings& c) {
        try {
            (void)decode_postings(c);
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("expected a decode error");
        return ErrorCode::kInvalidArgument;
    };
    CHECK(code_of(compressed({0x80}, 1)) == ErrorCode::kDecode);
    CHECK(code_of(compressed({0x03, 0x84}, 2)) == ErrorCode::kDecode);
    CHECK(code_of(compressed({0x03, 0x04}, 3)) == ErrorCode::kDecode);            // df mismatch
    CHECK(code_of(compressed({0x03, 0x00}, 2)) == ErrorCode::kDecode);            // zero gap
    CHECK(code_of(compressed({0xFF, 0xFF, 0xFF, 0xFF, 0x1F}, 1)) == ErrorCode::kDecode);  // > 32 bits
    CHECK(code_of(compressed({0xFF, 0xFF, 0xFF, 0xFF, 0x0F, 0x01}, 2)) == ErrorCode::kDecode);  // id overflow
}

TEST_CASE("non-increasing input is rejected")
{
    CHECK_THROWS_AS(PostingsList({3, 3}), Error);
    CHECK_THROWS_AS(PostingsList({5, 2}), Error);
    std::vector<DocId> raw{1, 4, 4};
    CHECK_THROWS_AS((void)encode_postings(std::span<const DocId>(raw)), Error);
}

TEST_CASE("encoding matches the reference encoder and roundtrips")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::size_t> len(1, 2000);
    std::uniform_int_distribution<int> scale(0, 3);
    const DocId bounds[] = {5000, 100000, 10000000, 0xFFFFFFFFu};
    for (int trial = 0; trial < 300; ++trial) {
        auto ids = random_list(rng, len(rng), bounds[scale(rng)]);
        auto c = encode_postings(std::span<const DocId>(ids));
        CHECK(c.bytes == testing::reference_vbyte(ids));
        CHECK(decode_postings(c) == PostingsList(ids));
        // Every gap costs at least one byte.
        CHECK(c.size_bits() >= 8 * ids.size());
    }
}

TEST_CASE("raw vbyte helpers")
{
    Bytes out;
    vbyte_append(out, 127);
    vbyte_append(out, 128);
    CHECK(out == Bytes{0x7F, 0x80, 0x01});
    CHECK(vbyte_decode_all(out) == std::vector<std::uint32_t>{127, 128});
    CHECK(vbyte_codec().name() == "vbyte");
}
