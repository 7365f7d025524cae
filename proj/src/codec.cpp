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

#include "tbix/codec.hpp"

#include <algorithm>

namespace tbix {

PostingsList::PostingsList(std::vector<DocId> ids) : ids_(std::move(ids))
{
    for (std::size_t i = 1; i < ids_.size(); ++i) {
        if (ids_[i] <= ids_[i - 1]) {
            throw Error(ErrorCode::kInvalidArgument,
                        "postings not strictly increasing at position " + std::to_string(i));
        }
    }
}

auto PostingsList::contains(DocId d) const -> bool
{
    return std::binary_search(ids_.begin(), ids_.end(), d);
}

void vbyte_append(std::vector<std::uint8_t>& out, std::uint32_t value)
{
    while (value >= 0x80) {
        out.push_back(static_cast<std::uint8_t>((value & 0x7F) | 0x80));
        value >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(value));
}

auto vbyte_decode_all(std::span<const std::uint8_t> bytes) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> out;
    std::uint64_t value = 0;
    unsigned shift = 0;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        std::uint8_t b = bytes[i];
        value |= static_cast<std::uint64_t>(b & 0x7F) << shift;
        shift += 7;
        if (value > 0xFFFFFFFFull || shift > 35) {
            throw Error(ErrorCode::kDecode,
                        "vbyte value exceeds 32 bits at byte " + std::to_string(i));
        }
        if ((b & 0x80) == 0) {
            out.push_back(static_cast<std::uint32_t>(value));
            value = 0;
            shift = 0;
        }
    }
    if (shift != 0) {
        throw Error(ErrorCode::kDecode, "truncated vbyte stream: dangling continuation byte");
    }
    return out;
}

auto VByteCodec::encode(std::span<const DocId> ids) const -> CompressedPostings
{
    CompressedPostings c;
    c.df = static_cast<std::uint32_t>(ids.size());
    c.bytes.reserve(ids.size());
    DocId prev = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0 && ids[i] <= prev) {
            throw Error(ErrorCode::kInvalidArgument,
                        "postings not strictly increasing at position " + std::to_string(i));
        }
        vbyte_append(c.bytes, i == 0 ? ids[i] : ids[i] - prev);
        prev = ids[i];
    }
    return c;
}

auto VByteCodec::decode(const CompressedPostings& c) const -> PostingsList
{
    auto gaps = vbyte_decode_all(c.bytes);
    if (gaps.size() != c.df) {
        throw Error(ErrorCode::kDecode, "decoded " + std::to_string(gaps.size())
                                            + " postings, expected " + std::to_string(c.df));
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (i > 0 && gaps[i] == 0) {
            throw Error(ErrorCode::kDecode, "zero gap at position " + std::to_string(i));
        }
        acc += gaps[i];
        if (acc > 0xFFFFFFFFull) {
            throw Error(ErrorCode::kDecode, "document id overflow at position " + std::to_string(i));
        }
        gaps[i] = static_cast<DocId>(acc);
    }
    return PostingsList(std::move(gaps));
}

auto vbyte_codec() -> const PostingsCodec&
{
    static const VByteCodec codec;
    return codec;
}

}  // namespace tbix
