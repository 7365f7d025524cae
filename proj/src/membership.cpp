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

#include "tbix/membership.hpp"

#include <algorithm>
#include <cmath>

namespace tbix {

auto ModelScope::all(std::uint32_t term_count) -> ModelScope
{
    ModelScope s;
    s.mask_.assign(term_count, true);
    s.size_ = term_count;
    return s;
}

auto ModelScope::of(std::uint32_t term_count, std::span<const TermId> terms) -> ModelScope
{
    ModelScope s;
    s.mask_.assign(term_count, false);
    for (TermId t : terms) {
        if (t >= term_count) {
            throw Error(ErrorCode::kInvalidArgument,
                        "scope term " + std::to_string(t) + " outside vocabulary");
        }
        if (!s.mask_[t]) {
            s.mask_[t] = true;
            ++s.size_;
        }
    }
    return s;
}

namespace {

class ExactModel final : public MembershipModel {
  public:
    ExactModel(const InvertedIndex& index, const ModelScope& scope)
        : scope_(scope), doc_count_(index.doc_count()), slot_(index.term_count())
    {
        if (scope.term_count() != index.term_count()) {
            throw Error(ErrorCode::kInvalidArgument, "scope and index vocabulary sizes differ");
        }
        const std::size_t words = (doc_count_ + 63) / 64;
        for (TermId t = 0; t < index.term_count(); ++t) {
            if (!scope.contains(t)) {
                continue;
            }
            auto list = index.decode(t);
            // A bitvector costs |D| bits, a sorted array 32 bits per posting.
            if (static_cast<std::uint64_t>(list.size()) * 32 >= doc_count_) {
                slot_[t] = Slot{true, static_cast<std::uint32_t>(dense_.size())};
                std::vector<std::uint64_t> bits(words, 0);
                for (DocId d : list) {
                    bits[d >> 6] |= std::uint64_t{1} << (d & 63);
                }
                dense_.push_back(std::move(bits));
            } else {
                slot_[t] = Slot{false, static_cast<std::uint32_t>(sparse_.size())};
                sparse_.push_back(std::move(list));
            }
        }
    }

    auto contains(TermId t, DocId d) const -> bool override
    {
        if (!scope_.contains(t)) {
            throw ScopeError(t);
        }
        if (d >= doc_count_) {
            return false;
        }
        const Slot& s = slot_[t];
        if (s.dense) {
            return (dense_[s.index][d >> 6] >> (d & 63)) & 1;
        }
        return sparse_[s.index].contains(d);
    }
    auto exact() const noexcept -> bool override { return true; }
    auto scope() const noexcept -> const ModelScope& override { return scope_; }

  private:
    struct Slot {
        bool dense = false;
        std::uint32_t index = 0;
    };

    ModelScope scope_;
    std::uint32_t doc_count_;
    std::vector<Slot> slot_;
    std::vector<std::vector<std::uint64_t>> dense_;
    std::vector<PostingsList> sparse_;
};

auto mix64(std::uint64_t x) -> std::uint64_t
{
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

class BloomModel final : public MembershipModel {
  public:
    BloomModel(const InvertedIndex& index, const ModelScope& scope, std::uint32_t bits_per_pair)
        : scope_(scope), probes_(bloom_hash_count(bits_per_pair))
    {
        if (scope.term_count() != index.term_count()) {
            throw Error(ErrorCode::kInvalidArgument, "scope and index vocabulary sizes differ");
        }
        std::uint64_t pairs = 0;
        for (TermId t = 0; t < index.term_count(); ++t) {
            if (scope.contains(t)) {
                pairs += index.df(t);
            }
        }
        num_bits_ = std::max<std::uint64_t>(64, (pairs * bits_per_pair + 63) / 64 * 64);
        bits_.assign(num_bits_ / 64, 0);
        for (TermId t = 0; t < index.term_count(); ++t) {
            if (!scope.contains(t)) {
                continue;
            }
            for (DocId d : index.decode(t)) {
                auto [h1, h2] = hashes(t, d);
                for (std::uint32_t i = 0; i < probes_; ++i) {
                    std::uint64_t bit = (h1 + i * h2) % num_bits_;
                    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
                }
            }
        }
    }

    auto contains(TermId t, DocId d) const -> bool override
    {
        if (!scope_.contains(t)) {
            throw ScopeError(t);
        }
        auto [h1, h2] = hashes(t, d);
        for (std::uint32_t i = 0; i < probes_; ++i) {
            std::uint64_t bit = (h1 + i * h2) % num_bits_;
            if (((bits_[bit >> 6] >> (bit & 63)) & 1) == 0) {
                return false;
            }
        }
        return true;
    }
    auto exact() const noexcept -> bool override { return false; }
    auto scope() const noexcept -> const ModelScope& override { return scope_; }

  private:
    static auto hashes(TermId t, DocId d) -> std::pair<std::uint64_t, std::uint64_t>
    {
        std::uint64_t key = (static_cast<std::uint64_t>(t) << 32) | d;
        std::uint64_t h1 = mix64(key);
        std::uint64_t h2 = mix64(key ^ 0xD6E8FEB86659FD93ull) | 1;
        return {h1, h2};
    }

    ModelScope scope_;
    std::uint32_t probes_;
    std::uint64_t num_bits_ = 64;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

auto bloom_hash_count(std::uint32_t bits_per_pair) -> std::uint32_t
{
    return std::max<std::uint32_t>(
        1, static_cast<std::uint32_t>(std::ceil(bits_per_pair * std::log(2.0))));
}

auto build_exact_model(const InvertedIndex& index, const ModelScope& scope)
    -> std::unique_ptr<MembershipModel>
{
    return std::make_unique<ExactModel>(index, scope);
}

auto build_bloom_model(const InvertedIndex& index, const ModelScope& scope,
                       std::uint32_t bits_per_pair) -> std::unique_ptr<MembershipModel>
{
    if (bits_per_pair == 0) {
        throw Error(ErrorCode::kInvalidArgument, "bits_per_pair must be >= 1");
    }
    return std::make_unique<BloomModel>(index, scope, bits_per_pair);
}

auto model_storage_bits(ModelCostParams params, std::uint64_t replaced_count,
                        std::uint64_t doc_count) -> double
{
    if (!(params.s >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "model cost s must be >= 0");
    }
    return (static_cast<double>(replaced_count) + static_cast<double>(doc_count)) * params.s;
}

}  // namespace tbix
