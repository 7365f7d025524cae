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

#include "tbix/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tbix/membership.hpp"

namespace tbix {

auto df_histogram(const InvertedIndex& index) -> std::map<std::uint32_t, std::uint32_t>
{
    std::map<std::uint32_t, std::uint32_t> hist;
    for (const auto& p : index.all_postings()) {
        ++hist[p.df];
    }
    return hist;
}

auto storage_fraction_curve(const InvertedIndex& index, std::span<const double> fractions)
    -> std::vector<std::uint32_t>
{
    if (index.term_count() == 0 || index.total_bits() == 0) {
        throw Error(ErrorCode::kInvalidArgument, "storage curve of an empty index");
    }
    std::vector<std::uint64_t> sizes;
    sizes.reserve(index.term_count());
    for (const auto& p : index.all_postings()) {
        sizes.push_back(p.size_bits());
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());

    const auto total = static_cast<double>(index.total_bits());
    std::vector<std::uint32_t> out;
    out.reserve(fractions.size());
    for (double phi : fractions) {
        if (!(phi > 0.0 && phi <= 1.0)) {
            throw Error(ErrorCode::kInvalidArgument, "storage fraction must be in (0, 1]");
        }
        const double target = phi * total;
        std::uint64_t acc = 0;
        std::uint32_t m = 0;
        while (m < sizes.size() && static_cast<double>(acc) < target) {
            acc += sizes[m++];
        }
        out.push_back(m);
    }
    return out;
}

auto estimate_trunc_list_size(const InvertedIndex& index, std::uint32_t k) -> TruncSizeEstimate
{
    if (k == 0) {
        throw Error(ErrorCode::kInvalidArgument, "truncation length k must be >= 1");
    }
    if (index.term_count() == 0) {
        throw Error(ErrorCode::kInvalidArgument, "truncated-list estimate of an empty index");
    }
    // length -> (sum of bits, list count)
    std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> by_len;
    for (const auto& p : index.all_postings()) {
        auto& [bits, count] = by_len[p.df];
        bits += p.size_bits();
        ++count;
    }
    auto mean = [](const auto& entry) {
        return static_cast<double>(entry.second.first) / static_cast<double>(entry.second.second);
    };

    auto hi = by_len.lower_bound(k);
    if (hi != by_len.end() && hi->first == k) {
        return {mean(*hi), TruncSizeEstimate::Source::kExact};
    }
    if (hi == by_len.end()) {
        return {mean(*by_len.rbegin()), TruncSizeEstimate::Source::kExtrapolated};
    }
    if (hi == by_len.begin()) {
        return {mean(*hi), TruncSizeEstimate::Source::kExtrapolated};
    }
    auto lo = std::prev(hi);
    const double x0 = lo->first;
    const double x1 = hi->first;
    const double y0 = mean(*lo);
    const double y1 = mean(*hi);
    return {y0 + (static_cast<double>(k) - x0) * (y1 - y0) / (x1 - x0),
            TruncSizeEstimate::Source::kInterpolated};
}

namespace {

struct ReplacedTotals {
    std::uint64_t count = 0;
    std::uint64_t full_bits = 0;
};

auto replaced_totals(const InvertedIndex& index, std::uint32_t k) -> ReplacedTotals
{
    ReplacedTotals r;
    for (const auto& p : index.all_postings()) {
        if (p.df > k) {
            ++r.count;
            r.full_bits += p.size_bits();
        }
    }
    return r;
}

auto gain_from(const ReplacedTotals& r, double trunc_bits, double s, const InvertedIndex& index)
    -> double
{
    const double lists = static_cast<double>(r.full_bits) - static_cast<double>(r.count) * trunc_bits;
    return lists - model_storage_bits({s}, r.count, index.doc_count())
           - static_cast<double>(index.term_count());
}

}  // namespace

auto gain(const InvertedIndex& index, std::uint32_t k, double s) -> double
{
    auto trunc = estimate_trunc_list_size(index, k);
    return gain_from(replaced_totals(index, k), trunc.bits, s, index);
}

auto gain_bounds_sweep(const InvertedIndex& index, std::span<const std::uint32_t> ks)
    -> std::vector<GainReport>
{
    if (ks.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "gain sweep needs at least one k");
    }
    std::vector<GainReport> out;
    out.reserve(ks.size());
    for (std::uint32_t k : ks) {
        auto trunc = estimate_trunc_list_size(index, k);
        auto totals = replaced_totals(index, k);
        GainReport rep;
        rep.k = k;
        rep.replaced_count = static_cast<std::uint32_t>(totals.count);
        rep.trunc_list_size_bits = trunc.bits;
        rep.trunc_extrapolated = trunc.source == TruncSizeEstimate::Source::kExtrapolated;
        rep.gain_upper_bits = gain_from(totals, trunc.bits, kUpperBoundModelBits, index);
        rep.gain_lower_bits = gain_from(totals, trunc.bits, kLowerBoundModelBits, index);
        if (totals.count > 0) {
            std::uint64_t measured = 0;
            for (TermId t = 0; t < index.term_count(); ++t) {
                if (index.df(t) > k) {
                    auto full = index.decode(t);
                    measured += encode_postings(full.ids().first(k)).size_bits();
                }
            }
            rep.measured_trunc_bits =
                static_cast<double>(measured) / static_cast<double>(totals.count);
        }
        out.push_back(rep);
    }
    return out;
}

auto guarantee_percentages(std::span<const Query> queries, const InvertedIndex& index,
                           std::uint32_t k) -> GuaranteeReport
{
    if (queries.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "guarantee analysis needs at least one query");
    }
    std::uint64_t with_model = 0;
    std::uint64_t without_model = 0;
    for (const auto& q : queries) {
        bool any = !q.unknown.empty();
        bool all = true;
        for (TermId t : q.terms) {
            bool complete = index.df(t) <= k;
            any = any || complete;
            all = all && complete;
        }
        with_model += any ? 1 : 0;
        without_model += all ? 1 : 0;
    }
    const auto n = static_cast<double>(queries.size());
    GuaranteeReport rep;
    rep.k = k;
    rep.query_count = static_cast<std::uint32_t>(queries.size());
    rep.pct_with_model = 100.0 * static_cast<double>(with_model) / n;
    rep.pct_without_model = 100.0 * static_cast<double>(without_model) / n;
    return rep;
}

}  // namespace tbix
