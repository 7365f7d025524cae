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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tbix/corpus.hpp"
#include "tbix/index.hpp"

namespace tbix {

/// Model cost settings for the upper (free model) and lower (one 128-dim
/// compressed embedding per unit) gain bounds, in bits.
inline constexpr double kUpperBoundModelBits = 0.0;
inline constexpr double kLowerBoundModelBits = 512.0;

/// Document frequency -> number of terms with that frequency.
[[nodiscard]] auto df_histogram(const InvertedIndex& index) -> std::map<std::uint32_t, std::uint32_t>;

/// For each fraction phi in (0, 1], the smallest m such that the m largest
/// compressed lists together hold at least phi of the index bits.
/// Throws Error(kInvalidArgument) on an empty index or phi outside (0, 1].
[[nodiscard]] auto storage_fraction_curve(const InvertedIndex& index, std::span<const double> fractions)
    -> std::vector<std::uint32_t>;

struct TruncSizeEstimate {
    enum class Source { kExact, kInterpolated, kExtrapolated };
    double bits = 0.0;
    Source source = Source::kExact;
};

/// Mean compressed size of lists whose length is exactly k. Without such
/// lists, interpolates linearly between the nearest populated lengths below
/// and above k; outside the observed range the mean at the nearest populated
/// length (the longest lists, for k > max df) is returned and flagged.
[[nodiscard]] auto estimate_trunc_list_size(const InvertedIndex& index, std::uint32_t k)
    -> TruncSizeEstimate;

/// Estimated storage gain in bits of replacing every list longer than k by a
/// truncated list plus a membership model costing s bits per unit:
///
///   sum_{t in R} [full(t) - trunc(k)] - (|R| + |D|) * s - |T|
///
/// May be negative.
[[nodiscard]] auto gain(const InvertedIndex& index, std::uint32_t k, double s) -> double;

struct GainReport {
    std::uint32_t k = 0;
    std::uint32_t replaced_count = 0;
    double gain_upper_bits = 0.0;  // s = 0
    double gain_lower_bits = 0.0;  // s = 512
    double trunc_list_size_bits = 0.0;
    bool trunc_extrapolated = false;
    // Mean size of the actual first-k lists of replaced terms, if any.
    std::optional<double> measured_trunc_bits;
};

[[nodiscard]] auto gain_bounds_sweep(const InvertedIndex& index, std::span<const std::uint32_t> ks)
    -> std::vector<GainReport>;

struct GuaranteeReport {
    std::uint32_t k = 0;
    double pct_with_model = 0.0;
    double pct_without_model = 0.0;
    std::uint32_t query_count = 0;
};

/// With a model a query's tier-1 answer is complete when some term has
/// df <= k; without one every term needs df <= k. Unknown tokens count as
/// df = 0. Throws Error(kInvalidArgument) for an empty query set.
[[nodiscard]] auto guarantee_percentages(std::span<const Query> queries, const InvertedIndex& index,
                                         std::uint32_t k) -> GuaranteeReport;

}  // namespace tbix
