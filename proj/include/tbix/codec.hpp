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
#include <string_view>
#include <vector>

#include "tbix/error.hpp"

namespace tbix {

/// Strictly increasing document identifiers of one term.
class PostingsList {
  public:
    PostingsList() = default;
    /// Throws Error(kInvalidArgument) if `ids` is not strictly increasing.
    explicit PostingsList(std::vector<DocId> ids);

    [[nodiscard]] auto ids() const noexcept -> std::span<const DocId> { return ids_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return ids_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return ids_.empty(); }
    [[nodiscard]] auto begin() const noexcept { return ids_.begin(); }
    [[nodiscard]] auto end() const noexcept { return ids_.end(); }
    [[nodiscard]] auto operator[](std::size_t i) const noexcept -> DocId { return ids_[i]; }
    [[nodiscard]] auto contains(DocId d) const -> bool;

    friend auto operator==(const PostingsList&, const PostingsList&) -> bool = default;

  private:
    std::vector<DocId> ids_;
};

struct CompressedPostings {
    std::vector<std::uint8_t> bytes;
    std::uint32_t df = 0;

    [[nodiscard]] auto size_bits() const noexcept -> std::uint64_t { return 8 * bytes.size(); }

    friend auto operator==(const CompressedPostings&, const CompressedPostings&) -> bool = default;
};

/// Codec for d-gap transformed postings. Implementations must be stateless.
class PostingsCodec {
  public:
    virtual ~PostingsCodec() = default;
    [[nodiscard]] virtual auto name() const -> std::string_view = 0;
    /// Throws Error(kInvalidArgument) on non-increasing input.
    [[nodiscard]] virtual auto encode(std::span<const DocId> ids) const -> CompressedPostings = 0;
    /// Throws Error(kDecode) on malformed input or a value count differing
    /// from `c.df`.
    [[nodiscard]] virtual auto decode(const CompressedPostings& c) const -> PostingsList = 0;
};

/// Variable-byte gap codec: g0 = id0, gi = idi - idi-1; each gap as 7-bit
/// little-endian groups, 0x80 set on every byte but the last of a value.
class VByteCodec final : public PostingsCodec {
  public:
    [[nodiscard]] auto name() const -> std::string_view override { return "vbyte"; }
    [[nodiscard]] auto encode(std::span<const DocId> ids) const -> CompressedPostings override;
    [[nodiscard]] auto decode(const CompressedPostings& c) const -> PostingsList override;
};

[[nodiscard]] auto vbyte_codec() -> const PostingsCodec&;

/// Raw vbyte helpers for unsigned 32-bit values, also used for block lists.
void vbyte_append(std::vector<std::uint8_t>& out, std::uint32_t value);
/// Decodes every value in `bytes`; throws Error(kDecode) on a dangling
/// continuation byte or a value wider than 32 bits.
[[nodiscard]] auto vbyte_decode_all(std::span<const std::uint8_t> bytes) -> std::vector<std::uint32_t>;

[[nodiscard]] inline auto encode_postings(const PostingsList& list) -> CompressedPostings
{
    return vbyte_codec().encode(list.ids());
}
[[nodiscard]] inline auto encode_postings(std::span<const DocId> ids) -> CompressedPostings
{
    return vbyte_codec().encode(ids);
}
[[nodiscard]] inline auto decode_postings(const CompressedPostings& c) -> PostingsList
{
    return vbyte_codec().decode(c);
}

}  // namespace tbix
