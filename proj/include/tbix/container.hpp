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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tbix/corpus.hpp"
#include "tbix/index.hpp"
#include "tbix/partition.hpp"

namespace tbix {

// Index container, all integers little-endian:
//
//   "TBIX" | u32 version | u32 |D| | u32 |T|
//   |T| x ( u32 df | u32 byte_len | vbyte gap bytes )      TermId order
//   sections until EOF: 4-byte tag | u64 payload_len | payload
//
// Sections:
//   "VOCB"  |T| x ( u32 len | token bytes )
//   "TIER"  u32 k | u32 policy | ceil(|T|/8) replaced-flag bytes (LSB first)
//           | |T| x ( tier-1 record | tier-2 record ), records as above
//   "BLOK"  u32 beta | u32 hybrid_threshold
//           | |T| x ( u32 block_count | u32 byte_len | vbyte gap bytes )
//
// Hybrid lists are not stored; they are the main postings of terms with
// df <= hybrid_threshold. Unknown section tags are skipped on read.

inline constexpr std::uint32_t kFormatVersion = 1;

struct IndexBundle {
    InvertedIndex index;
    std::optional<Vocabulary> vocabulary;
    std::optional<TieredIndex> tiered;
    std::optional<BlockIndex> blocks;
};

[[nodiscard]] auto serialize(const IndexBundle& bundle) -> std::vector<std::uint8_t>;

/// `name` only labels FormatError messages.
[[nodiscard]] auto deserialize(std::span<const std::uint8_t> bytes, const std::string& name)
    -> IndexBundle;

/// Throws Error(kIo) when the file cannot be written.
void save_bundle(const IndexBundle& bundle, const std::string& path);
/// Throws Error(kIo) when the file cannot be read, FormatError when malformed.
[[nodiscard]] auto load_bundle(const std::string& path) -> IndexBundle;

}  // namespace tbix
