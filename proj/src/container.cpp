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

#include "tbix/container.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

namespace tbix {

namespace {

constexpr std::array<char, 4> kMagic{'T', 'B', 'I', 'X'};
constexpr std::array<char, 4> kVocabTag{'V', 'O', 'C', 'B'};
constexpr std::array<char, 4> kTierTag{'T', 'I', 'E', 'R'};
constexpr std::array<char, 4> kBlockTag{'B', 'L', 'O', 'K'};

class Writer {
  public:
    void u32(std::uint32_t v)
    {
        for (int i = 0; i < 4; ++i) {
            out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }
    void u64(std::uint64_t v)
    {
        for (int i = 0; i < 8; ++i) {
            out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }
    void raw(std::span<const std::uint8_t> bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }
    void tag(const std::array<char, 4>& t)
    {
        for (char c : t) {
            out_.push_back(static_cast<std::uint8_t>(c));
        }
    }
    void postings(const CompressedPostings& c)
    {
        u32(c.df);
        u32(static_cast<std::uint32_t>(c.bytes.size()));
        raw(c.bytes);
    }
    // Writes tag, reserves the length field and returns a patch position.
    auto begin_section(const std::array<char, 4>& t) -> std::size_t
    {
        tag(t);
        std::size_t at = out_.size();
        u64(0);
        return at;
    }
    void end_section(std::size_t at)
    {
        std::uint64_t len = out_.size() - at - 8;
        for (int i = 0; i < 8; ++i) {
            out_[at + i] = static_cast<std::uint8_t>(len >> (8 * i));
        }
    }
    auto take() -> std::vector<std::uint8_t> { return std::move(out_); }

  private:
    std::vector<std::uint8_t> out_;
};

class Reader {
  public:
    Reader(std::span<const std::uint8_t> bytes, const std::string& name) : bytes_(bytes), name_(name) {}

    [[nodiscard]] auto offset() const noexcept -> std::uint64_t { return pos_; }
    [[nodiscard]] auto at_end() const noexcept -> bool { return pos_ == bytes_.size(); }
    [[noreturn]] void fail(const std::string& why, std::uint64_t at) const
    {
        throw FormatError(name_, at, why);
    }
    [[noreturn]] void fail(const std::string& why) const { fail(why, pos_); }

    auto take(std::uint64_t n) -> std::span<const std::uint8_t>
    {
        if (n > bytes_.size() - pos_) {
            fail("unexpected end of file (need " + std::to_string(n) + " bytes)");
        }
        auto s = bytes_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    auto u32() -> std::uint32_t
    {
        auto s = take(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v |= static_cast<std::uint32_t>(s[i]) << (8 * i);
        }
        return v;
    }
    auto u64() -> std::uint64_t
    {
        auto s = take(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v |= static_cast<std::uint64_t>(s[i]) << (8 * i);
        }
        return v;
    }
    auto tag() -> std::array<char, 4>
    {
        auto s = take(4);
        return {static_cast<char>(s[0]), static_cast<char>(s[1]), static_cast<char>(s[2]),
                static_cast<char>(s[3])};
    }
    auto postings() -> CompressedPostings
    {
        CompressedPostings c;
        c.df = u32();
        auto len = u32();
        auto s = take(len);
        c.bytes.assign(s.begin(), s.end());
        return c;
    }
    auto decoded(std::uint32_t doc_count) -> PostingsList
    {
        auto at = pos_;
        auto c = postings();
        try {
            auto list = vbyte_codec().decode(c);
            if (!list.empty() && list.ids().back() >= doc_count) {
                fail("document id out of range", at);
            }
            return list;
        } catch (const FormatError&) {
            throw;
        } catch (const Error& e) {
            fail(e.what(), at);
        }
    }

  private:
    std::span<const std::uint8_t> bytes_;
    const std::string& name_;
    std::uint64_t pos_ = 0;
};

void write_tier(Writer& w, const TieredIndex& tiered)
{
    auto at = w.begin_section(kTierTag);
    w.u32(tiered.k());
    w.u32(static_cast<std::uint32_t>(tiered.policy()));
    std::vector<std::uint8_t> flags((tiered.term_count() + 7) / 8, 0);
    for (TermId t = 0; t < tiered.term_count(); ++t) {
        if (tiered.replaced(t)) {
            flags[t / 8] |= static_cast<std::uint8_t>(1u << (t % 8));
        }
    }
    w.raw(flags);
    for (TermId t = 0; t < tiered.term_count(); ++t) {
        w.postings(encode_postings(tiered.tier1(t)));
        w.postings(encode_postings(tiered.tier2(t)));
    }
    w.end_section(at);
}

void write_blocks(Writer& w, const BlockIndex& blocks)
{
    auto at = w.begin_section(kBlockTag);
    w.u32(blocks.beta());
    w.u32(blocks.hybrid_threshold());
    for (TermId t = 0; t < blocks.term_count(); ++t) {
        auto list = blocks.block_list(t);
        w.postings(encode_postings(list));
    }
    w.end_section(at);
}

auto read_tier(Reader& r, const InvertedIndex& index, std::uint64_t section_start) -> TieredIndex
{
    auto k = r.u32();
    auto policy = r.u32();
    if (policy != static_cast<std::uint32_t>(TruncationPolicy::kLowestDocIds)) {
        r.fail("unsupported truncation policy " + std::to_string(policy), section_start);
    }
    auto flags_at = r.offset();
    auto flags = r.take((index.term_count() + 7) / 8);
    std::vector<PostingsList> tier1;
    std::vector<PostingsList> tier2;
    for (TermId t = 0; t < index.term_count(); ++t) {
        tier1.push_back(r.decoded(index.doc_count()));
        tier2.push_back(r.decoded(index.doc_count()));
    }
    try {
        TieredIndex tiered(k, TruncationPolicy::kLowestDocIds, std::move(tier1), std::move(tier2));
        for (TermId t = 0; t < index.term_count(); ++t) {
            bool flag = (flags[t / 8] >> (t % 8)) & 1;
            if (tiered.df(t) != index.df(t)) {
                r.fail("tier lengths disagree with postings of term " + std::to_string(t),
                       section_start);
            }
            if (flag != tiered.replaced(t)) {
                r.fail("replaced flag mismatch for term " + std::to_string(t), flags_at);
            }
        }
        return tiered;
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        r.fail(e.what(), section_start);
    }
}

auto read_blocks(Reader& r, const InvertedIndex& index, std::uint64_t section_start) -> BlockIndex
{
    auto beta = r.u32();
    auto hybrid = r.u32();
    if (beta == 0) {
        r.fail("block width is zero", section_start);
    }
    std::vector<std::vector<std::uint32_t>> lists;
    std::vector<PostingsList> hybrid_lists;
    for (TermId t = 0; t < index.term_count(); ++t) {
        auto list = r.decoded(std::numeric_limits<std::uint32_t>::max());
        lists.emplace_back(list.begin(), list.end());
        hybrid_lists.push_back(index.df(t) <= hybrid ? index.decode(t) : PostingsList{});
    }
    try {
        return BlockIndex(beta, index.doc_count(), hybrid, std::move(lists), std::move(hybrid_lists));
    } catch (const Error& e) {
        r.fail(e.what(), section_start);
    }
}

}  // namespace

auto serialize(const IndexBundle& bundle) -> std::vector<std::uint8_t>
{
    const auto& index = bundle.index;
    Writer w;
    w.tag(kMagic);
    w.u32(kFormatVersion);
    w.u32(index.doc_count());
    w.u32(index.term_count());
    for (const auto& p : index.all_postings()) {
        w.postings(p);
    }
    if (bundle.vocabulary) {
        auto at = w.begin_section(kVocabTag);
        for (const auto& tok : bundle.vocabulary->tokens()) {
            w.u32(static_cast<std::uint32_t>(tok.size()));
            w.raw(std::span(reinterpret_cast<const std::uint8_t*>(tok.data()), tok.size()));
        }
        w.end_section(at);
    }
    if (bundle.tiered) {
        write_tier(w, *bundle.tiered);
    }
    if (bundle.blocks) {
        write_blocks(w, *bundle.blocks);
    }
    return w.take();
}

auto deserialize(std::span<const std::uint8_t> bytes, const std::string& name) -> IndexBundle
{
    Reader r(bytes, name);
    if (r.tag() != kMagic) {
        r.fail("bad magic, not a TBIX index", 0);
    }
    auto version = r.u32();
    if (version != kFormatVersion) {
        r.fail("unsupported format version " + std::to_string(version), 4);
    }
    auto doc_count = r.u32();
    auto term_count = r.u32();

    IndexBundle bundle;
    std::vector<CompressedPostings> postings;
    postings.reserve(std::min<std::uint64_t>(term_count, bytes.size() / 8));
    for (std::uint32_t t = 0; t < term_count; ++t) {
        auto at = r.offset();
        auto c = r.postings();
        try {
            auto list = vbyte_codec().decode(c);
            if (list.empty() || list.ids().back() >= doc_count) {
                r.fail("postings of term " + std::to_string(t) + " empty or out of range", at);
            }
        } catch (const FormatError&) {
            throw;
        } catch (const Error& e) {
            r.fail(e.what(), at);
        }
        postings.push_back(std::move(c));
    }
    bundle.index = InvertedIndex(doc_count, std::move(postings));

    while (!r.at_end()) {
        auto section_start = r.offset();
        auto tag = r.tag();
        auto len = r.u64();
        auto payload = r.take(len);
        Reader sub(payload, name);
        auto base = section_start + 12;
        try {
            if (tag == kVocabTag) {
                std::vector<std::string> tokens;
                for (std::uint32_t t = 0; t < term_count; ++t) {
                    auto n = sub.u32();
                    auto s = sub.take(n);
                    tokens.emplace_back(reinterpret_cast<const char*>(s.data()), s.size());
                }
                try {
                    bundle.vocabulary = Vocabulary(std::move(tokens));
                } catch (const Error& e) {
                    sub.fail(e.what(), 0);
                }
            } else if (tag == kTierTag) {
                bundle.tiered = read_tier(sub, bundle.index, 0);
            } else if (tag == kBlockTag) {
                bundle.blocks = read_blocks(sub, bundle.index, 0);
            } else {
                continue;
            }
            if (!sub.at_end()) {
                sub.fail("trailing bytes in section");
            }
        } catch (const FormatError& e) {
            // Rebase section-relative offsets onto the file.
            throw FormatError(name, base + e.offset(), e.reason());
        }
    }
    return bundle;
}

void save_bundle(const IndexBundle& bundle, const std::string& path)
{
    auto bytes = serialize(bundle);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIo, path + ": cannot open for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(ErrorCode::kIo, path + ": write failed");
    }
}

auto load_bundle(const std::string& path) -> IndexBundle
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIo, path + ": cannot open for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorCode::kIo, path + ": read failed");
    }
    return deserialize(bytes, path);
}

}  // namespace tbix
