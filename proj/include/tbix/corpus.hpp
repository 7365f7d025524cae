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

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbix/error.hpp"

namespace tbix {

/// Splits `text` on maximal runs of non-alphanumeric characters and lowercases
/// the pieces. Nothing is filtered out: stopwords stay, duplicates stay.
///
/// ASCII letters and digits are alphanumeric. Non-ASCII code points count as
/// alphanumeric unless they fall in a punctuation, symbol or space block
/// (Latin-1 punctuation, General Punctuation through Misc Symbols/Arrows,
/// CJK punctuation, fullwidth ASCII punctuation). Only ASCII is case-folded.
/// Invalid UTF-8 sequences are treated as separators; use `ingest` for strict
/// validation.
[[nodiscard]] auto tokenize(std::string_view text) -> std::vector<std::string>;

/// Token <-> TermId map. TermIds are dense and follow ascending byte-wise
/// lexicographic order of the tokens.
class Vocabulary {
  public:
    Vocabulary() = default;
    /// `tokens` must be strictly increasing; throws kInvalidArgument otherwise.
    explicit Vocabulary(std::vector<std::string> tokens);

    [[nodiscard]] auto size() const noexcept -> std::size_t { return tokens_.size(); }
    [[nodiscard]] auto lookup(std::string_view token) const -> std::optional<TermId>;
    [[nodiscard]] auto token(TermId id) const -> const std::string& { return tokens_.at(id); }
    [[nodiscard]] auto tokens() const noexcept -> std::span<const std::string> { return tokens_; }

    friend auto operator==(const Vocabulary& a, const Vocabulary& b) -> bool
    {
        return a.tokens_ == b.tokens_;
    }

  private:
    std::vector<std::string> tokens_;
};

/// A finalized, immutable document collection.
class Corpus {
  public:
    Corpus(Vocabulary vocab, std::vector<std::vector<TermId>> docs);

    [[nodiscard]] auto doc_count() const noexcept -> std::size_t { return docs_.size(); }
    [[nodiscard]] auto term_count() const noexcept -> std::size_t { return vocab_.size(); }
    [[nodiscard]] auto vocabulary() const noexcept -> const Vocabulary& { return vocab_; }
    /// Token sequence of document `d`, as TermIds, in original order.
    [[nodiscard]] auto document(DocId d) const -> std::span<const TermId> { return docs_.at(d); }
    [[nodiscard]] auto documents() const noexcept -> const std::vector<std::vector<TermId>>&
    {
        return docs_;
    }

    friend auto operator==(const Corpus& a, const Corpus& b) -> bool
    {
        return a.vocab_ == b.vocab_ && a.docs_ == b.docs_;
    }

  private:
    Vocabulary vocab_;
    std::vector<std::vector<TermId>> docs_;
};

/// Reads one document per non-empty line. A trailing '\r' is stripped.
/// Throws EncodingError on invalid UTF-8 and Error(kEmptyCorpus) when the
/// stream holds no document.
[[nodiscard]] auto ingest(std::istream& source) -> Corpus;
[[nodiscard]] auto ingest_text(std::string_view text) -> Corpus;

struct Query {
    std::vector<TermId> terms;         // deduplicated, first-occurrence order
    std::vector<std::string> unknown;  // tokens missing from the vocabulary
};

/// Throws Error(kEmptyQuery) when `text` has no token and UnknownTermsError
/// when every token is unknown. Partially unknown queries succeed with the
/// unknown tokens recorded.
[[nodiscard]] auto parse_query(std::string_view text, const Vocabulary& vocab) -> Query;
[[nodiscard]] inline auto parse_query(std::string_view text, const Corpus& corpus) -> Query
{
    return parse_query(text, corpus.vocabulary());
}

}  // namespace tbix
