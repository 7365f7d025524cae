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

// tbix command-line tool. Talks to the engine exclusively through the C API.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbix/tbix.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(tbix_status status)
{
    if (status != TBIX_OK) {
        std::string msg = tbix_last_error_message();
        if (msg.empty()) {
            msg = tbix_status_name(status);
        }
        throw DataError(msg);
    }
}

struct IndexDeleter {
    void operator()(tbix_index* p) const { tbix_index_free(p); }
};
struct ModelDeleter {
    void operator()(tbix_model* p) const { tbix_model_free(p); }
};
struct ResultDeleter {
    void operator()(tbix_result* p) const { tbix_result_free(p); }
};
using IndexPtr = std::unique_ptr<tbix_index, IndexDeleter>;
using ModelPtr = std::unique_ptr<tbix_model, ModelDeleter>;
using ResultPtr = std::unique_ptr<tbix_result, ResultDeleter>;

auto load_index(const std::string& path) -> IndexPtr
{
    tbix_index* raw = nullptr;
    check(tbix_index_load(path.c_str(), &raw));
    return IndexPtr(raw);
}

auto info_of(const tbix_index* index) -> tbix_index_info
{
    tbix_index_info info{};
    check(tbix_index_get_info(index, &info));
    return info;
}

// Shortest round-trip decimal representation.
auto fmt_num(double v) -> std::string
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

auto split_list(const std::string& text) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Parses "1,10,100"; "max" (when allowed) is returned as nullopt.
auto parse_ks(const std::string& text, bool allow_max) -> std::vector<std::optional<std::uint32_t>>
{
    std::vector<std::optional<std::uint32_t>> out;
    for (const auto& item : split_list(text)) {
        if (allow_max && item == "max") {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || p != item.data() + item.size() || v == 0) {
            throw UsageError("--ks: '" + item + "' is not a positive integer");
        }
        out.emplace_back(v);
    }
    return out;
}

auto parse_doubles(const std::string& text, const std::string& flag) -> std::vector<double>
{
    std::vector<double> out;
    for (const auto& item : split_list(text)) {
        double v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || p != item.data() + item.size()) {
            throw UsageError(flag + ": '" + item + "' is not a number");
        }
        out.push_back(v);
    }
    return out;
}

auto read_lines(const std::string& path) -> std::vector<std::string>
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(path + ": cannot open for reading");
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    return lines;
}

auto is_blank(const std::string& s) -> bool
{
    return s.find_first_not_of(" \t") == std::string::npos;
}

void print_index_summary(const tbix_index* index)
{
    auto info = info_of(index);
    nlohmann::ordered_json j;
    j["docs"] = info.doc_count;
    j["terms"] = info.term_count;
    j["total_bits"] = info.total_bits;
    j["max_df"] = info.max_df;
    if (info.has_tier) {
        j["k"] = info.k;
        j["replaced"] = info.replaced_count;
    }
    if (info.has_blocks) {
        j["beta"] = info.beta;
        j["hybrid"] = info.hybrid_threshold;
    }
    std::cout << j.dump() << '\n';
}

struct Options {
    std::string corpus;
    std::string index;
    std::string out;
    std::string queries;
    std::string strategy = "oracle";
    std::string model = "exact";
    std::string format = "csv";
    std::string ks;
    std::string s_values = "0,512";
    std::string fractions = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
    std::uint32_t k = 0;
    std::uint32_t beta = 0;
    std::uint32_t hybrid = 0;
    std::uint32_t bits_per_pair = 16;
    bool fallback = false;
};

void require_csv(const Options& o)
{
    if (o.format != "csv") {
        throw UsageError("--out: only 'csv' is supported");
    }
}

auto run_build(const Options& o) -> int
{
    tbix_index* raw = nullptr;
    check(tbix_index_build(o.corpus.c_str(), &raw));
    IndexPtr index(raw);
    check(tbix_index_save(index.get(), o.out.c_str()));
    print_index_summary(index.get());
    return kExitOk;
}

auto run_tier(const Options& o) -> int
{
    auto index = load_index(o.index);
    check(tbix_index_build_tier(index.get(), o.k));
    check(tbix_index_save(index.get(), (o.out.empty() ? o.index : o.out).c_str()));
    print_index_summary(index.get());
    return kExitOk;
}

auto run_blocks(const Options& o) -> int
{
    auto index = load_index(o.index);
    check(tbix_index_build_blocks(index.get(), o.beta, o.hybrid));
    check(tbix_index_save(index.get(), (o.out.empty() ? o.index : o.out).c_str()));
    print_index_summary(index.get());
    return kExitOk;
}

auto strategy_of(const std::string& name) -> tbix_strategy
{
    if (name == "exhaustive") return TBIX_STRATEGY_EXHAUSTIVE;
    if (name == "tiered") return TBIX_STRATEGY_TIERED;
    if (name == "block") return TBIX_STRATEGY_BLOCK;
    return TBIX_STRATEGY_ORACLE;
}

auto run_query(const Options& o, bool k_given, bool beta_given) -> int
{
    const auto strategy = strategy_of(o.strategy);
    auto lines = read_lines(o.queries);
    auto index = load_index(o.index);
    if (k_given) {
        check(tbix_index_build_tier(index.get(), o.k));
    }
    if (beta_given) {
        check(tbix_index_build_blocks(index.get(), o.beta, o.hybrid));
    }
    ModelPtr model;
    if (strategy != TBIX_STRATEGY_ORACLE) {
        tbix_model* raw = nullptr;
        auto kind = o.model == "bloom" ? TBIX_MODEL_BLOOM : TBIX_MODEL_EXACT;
        check(tbix_model_create(index.get(), kind, strategy, o.bits_per_pair, &raw));
        model.reset(raw);
    }
    for (const auto& line : lines) {
        if (is_blank(line)) {
            continue;
        }
        tbix_result* raw = nullptr;
        check(tbix_query_run(index.get(), model.get(), strategy, o.fallback ? 1 : 0, line.c_str(), &raw));
        ResultPtr result(raw);
        tbix_result_stats stats{};
        tbix_result_get_stats(result.get(), &stats);
        const auto* docs = tbix_result_docs(result.get());
        nlohmann::ordered_json j;
        j["query"] = line;
        j["docids"] = std::vector<std::uint32_t>(docs, docs + tbix_result_size(result.get()));
        j["candidates_scanned"] = stats.candidates_scanned;
        j["model_probes"] = stats.model_probes;
        j["guaranteed"] = stats.guaranteed != 0;
        j["used_fallback"] = stats.used_fallback != 0;
        auto unknown = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < stats.unknown_count; ++i) {
            unknown.push_back(tbix_result_unknown_token(result.get(), i));
        }
        j["unknown"] = unknown;
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

auto run_stats(const Options& o) -> int
{
    auto fractions = parse_doubles(o.fractions, "--fractions");
    for (double f : fractions) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw UsageError("--fractions: values must lie in (0, 1]");
        }
    }
    auto index = load_index(o.index);
    auto info = info_of(index.get());
    std::size_t buckets = 0;
    check(tbix_df_histogram(index.get(), nullptr, 0, &buckets));
    std::vector<tbix_df_bucket> hist(buckets);
    check(tbix_df_histogram(index.get(), hist.data(), hist.size(), &buckets));
    std::vector<std::uint32_t> curve(fractions.size());
    check(tbix_storage_fraction_curve(index.get(), fractions.data(), fractions.size(), curve.data()));

    std::cout << "metric,key,value\n";
    std::cout << "doc_count,," << info.doc_count << '\n';
    std::cout << "term_count,," << info.term_count << '\n';
    std::cout << "total_bits,," << info.total_bits << '\n';
    for (const auto& b : hist) {
        std::cout << "df_terms," << b.df << ',' << b.term_count << '\n';
    }
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        std::cout << "min_terms_for_fraction," << fmt_num(fractions[i]) << ',' << curve[i] << '\n';
    }
    return kExitOk;
}

auto run_gain(const Options& o) -> int
{
    auto ks = parse_ks(o.ks, true);
    auto s_values = parse_doubles(o.s_values, "--s");
    for (double s : s_values) {
        if (!(s >= 0.0)) {
            throw UsageError("--s: model cost must be >= 0");
        }
    }
    auto index = load_index(o.index);
    auto max_df = info_of(index.get()).max_df;

    std::cout << "k,replaced,trunc_bits";
    for (double s : s_values) {
        std::cout << ",gain_s" << fmt_num(s);
    }
    std::cout << ",trunc_extrapolated,measured_trunc_bits\n";
    std::vector<double> gains(s_values.size());
    for (auto k : ks) {
        tbix_gain_row row{};
        check(tbix_gain(index.get(), k.value_or(max_df), s_values.data(), s_values.size(), &row,
                        gains.data()));
        std::cout << row.k << ',' << row.replaced << ',' << fmt_num(row.trunc_bits);
        for (double g : gains) {
            std::cout << ',' << fmt_num(g);
        }
        std::cout << ',' << row.trunc_extrapolated << ','
                  << (row.has_measured_trunc_bits ? fmt_num(row.measured_trunc_bits) : "") << '\n';
    }
    return kExitOk;
}

auto run_guarantees(const Options& o) -> int
{
    auto ks = parse_ks(o.ks, true);
    auto lines = read_lines(o.queries);
    std::vector<const char*> queries;
    for (const auto& l : lines) {
        if (!is_blank(l)) {
            queries.push_back(l.c_str());
        }
    }
    auto index = load_index(o.index);
    auto max_df = info_of(index.get()).max_df;
    std::cout << "k,pct_with,pct_without,queries\n";
    for (auto k : ks) {
        tbix_guarantee_row row{};
        check(tbix_guarantees(index.get(), queries.data(), queries.size(), k.value_or(max_df), &row));
        std::cout << row.k << ',' << fmt_num(row.pct_with_model) << ','
                  << fmt_num(row.pct_without_model) << ',' << row.query_count << '\n';
    }
    return kExitOk;
}

auto run_selftest() -> int
{
    std::uint32_t failures = 0;
    check(tbix_selftest(
        [](const char* name, int passed, const char* detail, void*) {
            std::cout << (passed ? "PASS " : "FAIL ") << name;
            if (!passed && detail && *detail) {
                std::cout << ": " << detail;
            }
            std::cout << '\n';
        },
        nullptr, &failures));
    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
    return failures == 0 ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tbix: conjunctive Boolean retrieval over an inverted index with a pluggable "
                 "term/document membership model. All storage sizes are reported in bits."};
    app.require_subcommand(1, 1);
    Options o;

    auto* build = app.add_subcommand("build", "Ingest a corpus (one document per line) and write an index file");
    build->add_option("--corpus", o.corpus, "UTF-8 text, one document per non-empty line")->required();
    build->add_option("--out", o.out, "Index file to write")->required();

    auto* tier = app.add_subcommand("tier", "Attach a two-tier partition with truncation length k");
    tier->add_option("--index", o.index, "Index file")->required();
    tier->add_option("--k", o.k, "Tier-1 list length (>= 1)")->required();
    tier->add_option("--out", o.out, "Write here instead of updating --index in place");

    auto* blocks = app.add_subcommand("blocks", "Attach a block partition of width beta");
    blocks->add_option("--index", o.index, "Index file")->required();
    blocks->add_option("--beta", o.beta, "Documents per block (>= 1)")->required();
    blocks->add_option("--hybrid", o.hybrid, "Keep exact lists for terms with df <= n (0 = off)");
    blocks->add_option("--out", o.out, "Write here instead of updating --index in place");

    auto* query = app.add_subcommand("query", "Run one conjunctive query per line; JSON lines out");
    query->add_option("--index", o.index, "Index file")->required();
    query->add_option("--queries", o.queries, "Query file, one query per line")->required();
    query->add_option("--strategy", o.strategy, "exhaustive | tiered | block | oracle")
        ->check(CLI::IsMember({"exhaustive", "tiered", "block", "oracle"}));
    auto* fallback_flag = query->add_flag("--fallback", o.fallback, "Tiered: scan tier 2 when not guaranteed");
    auto* model_opt = query->add_option("--model", o.model, "exact | bloom")
                          ->check(CLI::IsMember({"exact", "bloom"}));
    auto* bpp_opt = query->add_option("--bits-per-pair", o.bits_per_pair, "Bloom model bits per (term, doc) pair");
    auto* qk_opt = query->add_option("--k", o.k, "Tiered: build the tier partition on the fly");
    auto* qbeta_opt = query->add_option("--beta", o.beta, "Block: build the block partition on the fly");
    auto* qhybrid_opt = query->add_option("--hybrid", o.hybrid, "Block: hybrid threshold for --beta");

    auto* stats = app.add_subcommand("stats", "Document-frequency histogram and storage-fraction curve (CSV)");
    stats->add_option("--index", o.index, "Index file")->required();
    stats->add_option("--out", o.format, "Output format (csv)");
    stats->add_option("--fractions", o.fractions, "Comma-separated fractions of total index bits");

    auto* gain = app.add_subcommand("gain", "Estimated storage gain in bits per truncation length (CSV)");
    gain->add_option("--index", o.index, "Index file")->required();
    gain->add_option("--ks", o.ks, "Comma-separated truncation lengths; 'max' = max df")->required();
    gain->add_option("--s", o.s_values, "Comma-separated model costs in bits per unit (default 0,512)");
    gain->add_option("--out", o.format, "Output format (csv)");

    auto* guarantees = app.add_subcommand("guarantees", "Share of queries whose tier-1 answer is provably complete (CSV)");
    guarantees->add_option("--index", o.index, "Index file")->required();
    guarantees->add_option("--queries", o.queries, "Query file, one query per line")->required();
    guarantees->add_option("--ks", o.ks, "Comma-separated truncation lengths; 'max' = max df")->required();
    guarantees->add_option("--out", o.format, "Output format (csv)");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in fixture suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "tbix: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (tier->parsed() && o.k == 0) {
            throw UsageError("--k must be >= 1");
        }
        if (blocks->parsed() && o.beta == 0) {
            throw UsageError("--beta must be >= 1");
        }
        if (query->parsed()) {
            if (*fallback_flag && o.strategy != "tiered") {
                throw UsageError("--fallback requires --strategy tiered");
            }
            if (*qk_opt && (o.strategy != "tiered" || o.k == 0)) {
                throw UsageError("--k requires --strategy tiered and a value >= 1");
            }
            if ((*qbeta_opt || *qhybrid_opt) && o.strategy != "block") {
                throw UsageError("--beta/--hybrid require --strategy block");
            }
            if (*qbeta_opt && o.beta == 0) {
                throw UsageError("--beta must be >= 1");
            }
            if (*qhybrid_opt && !*qbeta_opt) {
                throw UsageError("--hybrid requires --beta");
            }
            if (*model_opt && o.strategy == "oracle") {
                throw UsageError("--model does not apply to --strategy oracle");
            }
            if (*bpp_opt && (o.model != "bloom" || o.bits_per_pair == 0)) {
                throw UsageError("--bits-per-pair requires --model bloom and a value >= 1");
            }
        }
        if (stats->parsed() || gain->parsed() || guarantees->parsed()) {
            require_csv(o);
        }

        if (build->parsed()) return run_build(o);
        if (tier->parsed()) return run_tier(o);
        if (blocks->parsed()) return run_blocks(o);
        if (query->parsed()) return run_query(o, qk_opt->count() > 0, qbeta_opt->count() > 0);
        if (stats->parsed()) return run_stats(o);
        if (gain->parsed()) return run_gain(o);
        if (guarantees->parsed()) return run_guarantees(o);
        if (selftest->parsed()) return run_selftest();
    } catch (const UsageError& e) {
        std::cerr << "tbix: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "tbix: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
