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

#include "tbix/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace tbix {

namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at text[pos]. Returns kInvalid and a length
// of 1 for malformed sequences (overlong forms, surrogates, > U+10FFFF).
auto decode_utf8(std::string_view text, std::size_t pos, std::size_t& len) -> char32_t
{
    auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    unsigned char lead = byte(pos);
    len = 1;
    if (lead < 0x80) {
        return lead;
    }
    std::size_t need = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((lead & 0xE0) == 0xC0) {
        need = 1, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
        need = 2, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
        need = 3, cp = lead & 0x07, min = 0x10000;
    } else {
        return kInvalid;
    }
    if (pos + need >= text.size()) {
        return kInvalid;
    }
    for (std::size_t i = 1; i <= need; ++i) {
        unsigned char c = byte(pos + i);
        if ((c & 0xC0) != 0x80) {
            return kInvalid;
        }
        cp = (cp << 6) | (c & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        return kInvalid;
    }
    len = need + 1;
    return cp;
}

auto in(char32_t cp, char32_t lo, char32_t hi) -> bool { return cp >= lo && cp <= hi; }

auto is_alnum(char32_t cp) -> bool
{
    if (cp < 0x80) {
        return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
    }
    if (cp == kInvalid) {
        return false;
    }
    if (in(cp, 0x80, 0xBF)) {
        return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
    }
    return !(cp == 0xD7 || cp == 0xF7 || cp == 0xFEFF || in(cp, 0x2000, 0x2BFF)
             || in(cp, 0x2E00, 0x2E7F) || in(cp, 0x3000, 0x303F) || in(cp, 0xFE10, 0xFE1F)
             || in(cp, 0xFE30, 0xFE4F) || in(cp, 0xFF00, 0xFF0F) || in(cp, 0xFF1A, 0xFF20)
             || in(cp, 0xFF3B, 0xFF40) || in(cp, 0xFF5B, 0xFF65) || in(cp, 0x1F000, 0x1FAFF));
}

// Calls fn(std::string_view) for every token of `text`. The view is only valid
// during the call.
template <typename Fn>
void for_each_token(std::string_view text, Fn&& fn)
{
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t len = 1;
        char32_t cp = decode_utf8(text, pos, len);
        if (is_alnum(cp)) {
            if (cp < 0x80) {
                current.push_back(static_cast<char>(cp >= 'A' && cp <= 'Z' ? cp + ('a' - 'A') : cp));
            } else {
                current.append(text.substr(pos, len));
            }
        } else if (!current.empty()) {
            fn(std::string_view(current));
            current.clear();
        }
        pos += len;
    }
    if (!current.empty()) {
        fn(std::string_view(current));
    }
}

auto first_invalid_byte(std::string_view text) -> std::optional<std::size_t>
{
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t len = 1;
        if (decode_utf8(text, pos, len) == kInvalid) {
            return pos;
        }
        pos += len;
    }
    return std::nullopt;
}

}  // namespace

auto tokenize(std::string_view text) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for_each_token(text, [&](std::string_view tok) { out.emplace_back(tok); });
    return out;
}

Vocabulary::Vocabulary(std::vector<std::string> tokens) : tokens_(std::move(tokens))
{
    for (std::size_t i = 1; i < tokens_.size(); ++i) {
        if (!(tokens_[i - 1] < tokens_[i])) {
            throw Error(ErrorCode::kInvalidArgument,
                        "vocabulary tokens must be strictly increasing (at id " + std::to_string(i)
                            + ")");
        }
    }
}

auto Vocabulary::lookup(std::string_view token) const -> std::optional<TermId>
{
    auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == tokens_.end() || *it != token) {
        return std::nullopt;
    }
    return static_cast<TermId>(it - tokens_.begin());
}

Corpus::Corpus(Vocabulary vocab, std::vector<std::vector<TermId>> docs)
    : vocab_(std::move(vocab)), docs_(std::move(docs))
{
    for (const auto& doc : docs_) {
        for (TermId t : doc) {
            if (t >= vocab_.size()) {
                throw Error(ErrorCode::kInvalidArgument,
                            "document references term id " + std::to_string(t)
                                + " outside the vocabulary");
            }
        }
    }
}

auto ingest(std::istream& source) -> Corpus
{
    std::unordered_map<std::string, TermId> interned;
    std::vector<std::string> first_seen;
    std::vector<std::vector<TermId>> docs;

    std::string line;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (std::getline(source, line)) {
        ++line_no;
        std::size_t line_start = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (auto bad = first_invalid_byte(line)) {
            throw EncodingError(line_no, line_start + *bad);
        }
        std::vector<TermId> doc;
        for_each_token(line, [&](std::string_view tok) {
            auto [it, inserted] =
                interned.try_emplace(std::string(tok), static_cast<TermId>(first_seen.size()));
            if (inserted) {
                first_seen.push_back(it->first);
            }
            doc.push_back(it->second);
        });
        docs.push_back(std::move(doc));
    }
    if (source.bad()) {
        throw Error(ErrorCode::kIo, "read error after line " + std::to_string(line_no));
    }
    if (docs.empty()) {
        throw Error(ErrorCode::kEmptyCorpus, "corpus contains no documents");
    }

    // Reassign ids in lexicographic token order.
    std::vector<TermId> order(first_seen.size());
    std::iota(order.begin(), order.end(), TermId{0});
    std::sort(order.begin(), order.end(),
              [&](TermId a, TermId b) { return first_seen[a] < first_seen[b]; });
    std::vector<TermId> remap(order.size());
    std::vector<std::string> sorted;
    sorted.reserve(order.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        remap[order[rank]] = static_cast<TermId>(rank);
        sorted.push_back(std::move(first_seen[order[rank]]));
    }
    for (auto& doc : docs) {
        for (auto& t : doc) {
            t = remap[t];
        }
    }
    return Corpus(Vocabulary(std::move(sorted)), std::move(docs));
}

auto ingest_text(std::string_view text) -> Corpus
{
    std::istringstream in{std::string(text)};
    return ingest(in);
}

auto parse_query(std::string_view text, const Vocabulary& vocab) -> Query
{
    Query q;
    bool any = false;
    for_each_token(text, [&](std::string_view tok) {
        any = true;
        if (auto id = vocab.lookup(tok)) {
            if (std::find(q.terms.begin(), q.terms.end(), *id) == q.terms.end()) {
                q.terms.push_back(*id);
            }
        } else if (std::find(q.unknown.begin(), q.unknown.end(), tok) == q.unknown.end()) {
            q.unknown.emplace_back(tok);
        }
    });
    if (!any) {
        throw Error(ErrorCode::kEmptyQuery, "query has no terms");
    }
    if (q.terms.empty()) {
        throw UnknownTermsError(std::move(q.unknown));
    }
    return q;
}

}  // namespace tbix
