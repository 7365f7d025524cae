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
#include <sstream>

#include "tbix/corpus.hpp"
#include "tbix/index.hpp"
#include "test_support.hpp"

using namespace tbix;

namespace {
const char* kCorpusA = "the cat sat\nthe dog sat\na cat ran\n";

auto vocab_of(const Corpus& c) -> std::vector<std::string>
{
    return {c.vocabulary().tokens().begin(), c.vocabulary().tokens().end()};
}
}  // namespace

TEST_CASE("tokenize casefolds and splits on punctuation")
{
    CHECK(tokenize("The CAT, sat.") == std::vector<std::string>{"the", "cat", "sat"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("a\xE2\x80\x94" "b  c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(tokenize("--- ...").empty());
}

TEST_CASE("tokenize keeps stopwords, duplicates and digits")
{
    CHECK(tokenize("the the of a") == std::vector<std::string>{"the", "the", "of", "a"});
    CHECK(tokenize("B2B x_y") == std::vector<std::string>{"b2b", "x", "y"});
}

TEST_CASE("tokenize treats non-ASCII letters as word characters")
{
    CHECK(tokenize("caf\xC3\xA9 \xE2\x80\x9Cna\xC3\xAFve\xE2\x80\x9D")
          == std::vector<std::string>{"caf\xC3\xA9", "na\xC3\xAFve"});
    CHECK(tokenize("\xE4\xB8\xAD\xE6\x96\x87\xE3\x80\x82x")
          == std::vector<std::string>{"\xE4\xB8\xAD\xE6\x96\x87", "x"});
}

TEST_CASE("ingest assigns lexicographic term ids")
{
    auto c = ingest_text(kCorpusA);
    CHECK(c.doc_count() == 3);
    CHECK(c.term_count() == 6);
    CHECK(vocab_of(c) == std::vector<std::string>{"a", "cat", "dog", "ran", "sat", "the"});
    CHECK(c.document(0).size() == 3);
    CHECK(c.document(2)[0] == 0);  // "a"
}

TEST_CASE("ingest edge cases")
{
    SUBCASE("singleton")
    {
        auto c = ingest_text("x");
        CHECK(c.doc_count() == 1);
        CHECK(c.term_count() == 1);
    }
    SUBCASE("duplicate lines")
    {
        auto c = ingest_text("a b\na b\n");
        CHECK(c.doc_count() == 2);
        CHECK(c.term_count() == 2);
        CHECK(std::equal(c.document(0).begin(), c.document(0).end(), c.document(1).begin(),
                         c.document(1).end()));
    }
    SUBCASE("blank lines are skipped and CRLF is accepted")
    {
        auto c = ingest_text("\nx y\r\n\r\ny\n\n");
        CHECK(c.doc_count() == 2);
        CHECK(vocab_of(c) == std::vector<std::string>{"x", "y"});
    }
    SUBCASE("punctuation-only line is a document without tokens")
    {
        auto c = ingest_text("a\n...\nb\n");
        CHECK(c.doc_count() == 3);
        CHECK(c.document(1).empty());
    }
}

TEST_CASE("ingest rejects empty input")
{
    for (const char* text : {"", "\n\n", "\r\n"}) {
        try {
            (void)ingest_text(text);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::kEmptyCorpus);
        }
    }
}

TEST_CASE("ingest rejects invalid UTF-8 with its position")
{
    std::string text = "ok line\nbad \xC3(\n";
    try {
        (void)ingest_text(text);
        FAIL("expected an encoding error");
    } catch (const EncodingError& e) {
        CHECK(e.code() == ErrorCode::kEncoding);
        CHECK(e.line() == 2);
        CHECK(e.byte_offset() == 12);
    }
    CHECK_THROWS_AS((void)ingest_text("\xED\xA0\x80\n"), EncodingError);  // surrogate
    CHECK_THROWS_AS((void)ingest_text("\xC0\xAF\n"), EncodingError);      // overlong
    CHECK_THROWS_AS((void)ingest_text("abc\xE2\x80"), EncodingError);      // truncated
}

TEST_CASE("parse_query maps, deduplicates and reports unknown tokens")
{
    auto c = ingest_text(kCorpusA);
    CHECK(parse_query("the cat", c).terms == std::vector<TermId>{5, 1});
    CHECK(parse_query("cat cat", c).terms == std::vector<TermId>{1});
    CHECK(parse_query("Cat, SAT!", c).terms == std::vector<TermId>{1, 4});

    try {
        (void)parse_query("zebra", c);
        FAIL("expected unknown-term error");
    } catch (const UnknownTermsError& e) {
        CHECK(e.tokens() == std::vector<std::string>{"zebra"});
        CHECK(e.code() == ErrorCode::kUnknownTerms);
    }

    auto partial = parse_query("cat zebra zebra", c);
    CHECK(partial.terms == std::vector<TermId>{1});
    CHECK(partial.unknown == std::vector<std::string>{"zebra"});

    for (const char* empty : {"", "  ", "?!"}) {
        try {
            (void)parse_query(empty, c);
            FAIL("expected empty-query error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::kEmptyQuery);
        }
    }
}

TEST_CASE("ingestion is deterministic and term ids ignore document order")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto text = testing::random_small_corpus(rng, 30, 20);
        CHECK(ingest_text(text) == ingest_text(text));

        std::vector<std::string> lines;
        std::istringstream in(text);
        for (std::string l; std::getline(in, l);) {
            lines.push_back(l);
        }
        std::shuffle(lines.begin(), lines.end(), rng);
        std::string shuffled;
        for (const auto& l : lines) {
            shuffled += l + "\n";
        }
        CHECK(ingest_text(shuffled).vocabulary() == ingest_text(text).vocabulary());
    }
}

TEST_CASE("every token of every document parses and is posted for that document")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto c = ingest_text(testing::random_small_corpus(rng));
        auto index = build_index(c);
        for (DocId d = 0; d < c.doc_count(); ++d) {
            for (TermId t : c.document(d)) {
                auto q = parse_query(c.vocabulary().token(t), c);
                REQUIRE(q.terms.size() == 1);
                CHECK(index.decode(q.terms[0]).contains(d));
            }
        }
    }
}
