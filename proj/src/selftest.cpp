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

#include "tbix/selftest.hpp"

#include <functional>
#include <sstream>
#include <type_traits>

#include "tbix/analysis.hpp"
#include "tbix/container.hpp"
#include "tbix/engine.hpp"

namespace tbix {

namespace {

template <typename T>
auto show(const T& v) -> std::string
{
    std::ostringstream os;
    if constexpr (requires { v.begin(); }) {
        os << '[';
        bool first = true;
        for (const auto& x : v) {
            os << (first ? "" : ",");
            if constexpr (requires { x.first; }) {
                os << x.first << ':' << x.second;
            } else if constexpr (std::is_integral_v<std::decay_t<decltype(x)>>) {
                os << static_cast<long long>(x);
            } else {
                os << x;
            }
            first = false;
        }
        os << ']';
    } else {
        os << v;
    }
    return os.str();
}

class Suite {
  public:
    template <typename A, typename B>
    void eq(const std::string& name, const A& actual, const B& expected)
    {
        bool ok = actual == expected;
        cases_.push_back({name, ok, ok ? "" : "got " + show(actual) + ", expected " + show(expected)});
    }
    void run(const std::string& name, const std::function<void(Suite&)>& body)
    {
        try {
            body(*this);
        } catch (const std::exception& e) {
            cases_.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    auto take() -> std::vector<SelftestCase> { return std::move(cases_); }

  private:
    std::vector<SelftestCase> cases_;
};

auto ids(std::initializer_list<DocId> v) { return std::vector<DocId>(v); }

auto docs(const QueryResult& r) { return r.doc_ids; }

}  // namespace

auto run_selftest() -> std::vector<SelftestCase>
{
    Suite s;
    s.run("fixture", [](Suite& s) {
        const auto corpus = ingest_text(kFixtureCorpus);
        s.eq("corpus.doc_count", corpus.doc_count(), 3u);
        s.eq("corpus.term_count", corpus.term_count(), 6u);
        std::vector<std::string> vocab(corpus.vocabulary().tokens().begin(),
                                       corpus.vocabulary().tokens().end());
        s.eq("corpus.vocabulary", vocab,
             std::vector<std::string>{"a", "cat", "dog", "ran", "sat", "the"});
        s.eq("query.parse", parse_query("the cat", corpus).terms, std::vector<TermId>{5, 1});

        const auto index = build_index(corpus);
        const std::vector<std::vector<DocId>> postings{{2}, {0, 2}, {1}, {2}, {0, 1}, {0, 1}};
        for (TermId t = 0; t < 6; ++t) {
            auto list = index.decode(t);
            s.eq("index.postings." + corpus.vocabulary().token(t),
                 std::vector<DocId>(list.begin(), list.end()), postings[t]);
        }
        s.eq("index.total_bits", index.total_bits(), 72u);
        s.eq("codec.encode", encode_postings(PostingsList(ids({3, 7, 15}))).bytes,
             std::vector<std::uint8_t>{0x03, 0x04, 0x08});
        s.eq("codec.encode_300", encode_postings(PostingsList(ids({300}))).bytes,
             std::vector<std::uint8_t>{0xAC, 0x02});

        IndexBundle bundle{index, corpus.vocabulary(), build_tiered(index, 1), build_blocks(index, 2)};
        auto reloaded = deserialize(serialize(bundle), "<selftest>");
        s.eq("container.roundtrip", reloaded.index == index && reloaded.vocabulary == bundle.vocabulary
                                        && reloaded.tiered == bundle.tiered
                                        && reloaded.blocks == bundle.blocks,
             true);

        auto model = build_exact_model(index, ModelScope::all(index.term_count()));
        s.eq("model.cat_in_d0", model->contains(1, 0), true);
        s.eq("model.dog_in_d0", model->contains(2, 0), false);
        s.eq("model.cat_in_d2", model->contains(1, 2), true);
        s.eq("model.storage_s512", model_storage_bits({512}, 3, 3), 3072.0);

        const auto& tiered = *bundle.tiered;
        s.eq("tier.replaced", replaced_set(tiered), std::vector<TermId>{1, 4, 5});
        s.eq("tier.tier2_cat", tiered.tier2(1), PostingsList(ids({2})));
        s.eq("blocks.cat", std::vector<std::uint32_t>(bundle.blocks->block_list(1).begin(),
                                                      bundle.blocks->block_list(1).end()),
             std::vector<std::uint32_t>{0, 1});

        auto q = [&](std::string_view text) { return parse_query(text, corpus); };
        auto ex = query_exhaustive(q("cat sat"), *model, 3);
        s.eq("exhaustive.cat_sat", docs(ex), ids({0}));
        s.eq("exhaustive.cat_sat.scanned", ex.candidates_scanned, 3u);
        s.eq("exhaustive.the_sat", docs(query_exhaustive(q("the sat"), *model, 3)), ids({0, 1}));
        s.eq("exhaustive.cat_dog", docs(query_exhaustive(q("cat dog"), *model, 3)), ids({}));

        auto t1 = query_tiered(q("the sat"), tiered, *model, false);
        s.eq("tiered.the_sat", docs(t1), ids({0}));
        s.eq("tiered.the_sat.guaranteed", t1.guaranteed, false);
        auto t2 = query_tiered(q("the sat"), tiered, *model, true);
        s.eq("tiered.the_sat.fallback", docs(t2), ids({0, 1}));
        s.eq("tiered.the_sat.used_fallback", t2.used_fallback, true);
        auto t3 = query_tiered(q("a cat"), tiered, *model, false);
        s.eq("tiered.a_cat", docs(t3), ids({2}));
        s.eq("tiered.a_cat.guaranteed", t3.guaranteed, true);

        auto b1 = query_block(q("the cat"), *bundle.blocks, *model);
        s.eq("block.the_cat", docs(b1), ids({0}));
        s.eq("block.the_cat.scanned", b1.candidates_scanned, 2u);
        auto b2 = query_block(q("a dog"), *bundle.blocks, *model);
        s.eq("block.a_dog", docs(b2), ids({}));
        s.eq("block.a_dog.scanned", b2.candidates_scanned, 0u);

        s.eq("oracle.cat_sat", docs(query_oracle(q("cat sat"), index)), ids({0}));
        s.eq("oracle.the", docs(query_oracle(q("the"), index)), ids({0, 1}));
        s.eq("oracle.a_dog", docs(query_oracle(q("a dog"), index)), ids({}));

        s.eq("analysis.df_histogram", df_histogram(index),
             std::map<std::uint32_t, std::uint32_t>{{1, 3}, {2, 3}});
        std::vector<double> phis{0.4, 1.0};
        s.eq("analysis.storage_curve", storage_fraction_curve(index, phis),
             std::vector<std::uint32_t>{2, 6});
        s.eq("analysis.trunc_k1", estimate_trunc_list_size(index, 1).bits, 8.0);
        s.eq("analysis.trunc_k2", estimate_trunc_list_size(index, 2).bits, 16.0);
        s.eq("analysis.gain_k1_s0", gain(index, 1, 0), 18.0);
        s.eq("analysis.gain_k1_s1", gain(index, 1, 1), 12.0);
        s.eq("analysis.gain_k2_s0", gain(index, 2, 0), -6.0);
        std::vector<std::uint32_t> ks{1};
        s.eq("analysis.gain_k1_s512", gain_bounds_sweep(index, ks).front().gain_lower_bits, -3054.0);

        std::vector<Query> queries{q("a cat"), q("the cat")};
        auto g = guarantee_percentages(queries, index, 1);
        s.eq("analysis.guarantee_with", g.pct_with_model, 50.0);
        s.eq("analysis.guarantee_without", g.pct_without_model, 0.0);
    });
    return s.take();
}

}  // namespace tbix
