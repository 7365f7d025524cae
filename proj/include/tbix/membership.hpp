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
#include <memory>
#include <span>
#include <vector>

#include "tbix/index.hpp"

namespace tbix {

/// Set of terms a membership model answers for.
class ModelScope {
  public:
    [[nodiscard]] static auto all(std::uint32_t term_count) -> ModelScope;
    /// Throws Error(kInvalidArgument) if a term is >= term_count.
    [[nodiscard]] static auto of(std::uint32_t term_count, std::span<const TermId> terms) -> ModelScope;

    [[nodiscard]] auto contains(TermId t) const noexcept -> bool { return t < mask_.size() && mask_[t]; }
    [[nodiscard]] auto term_count() const noexcept -> std::uint32_t
    {
        return static_cast<std::uint32_t>(mask_.size());
    }
    [[nodiscard]] auto size() const noexcept -> std::uint32_t { return size_; }

  private:
    std::vector<bool> mask_;
    std::uint32_t size_ = 0;
};

/// The term/document predicate f(t, d). Exact models satisfy
/// contains(t, d) <=> t occurs in d; approximate ones may report false
/// positives but never false negatives. Implementations are immutable and
/// safe for concurrent use.
class MembershipModel {
  public:
    virtual ~MembershipModel() = default;

    /// Throws ScopeError when `t` is outside scope().
    [[nodiscard]] virtual auto contains(TermId t, DocId d) const -> bool = 0;
    [[nodiscard]] virtual auto exact() const noexcept -> bool = 0;
    [[nodiscard]] virtual auto scope() const noexcept -> const ModelScope& = 0;
};

/// Backed by per-term bitvectors (dense terms) or sorted arrays (sparse terms).
[[nodiscard]] auto build_exact_model(const InvertedIndex& index, const ModelScope& scope)
    -> std::unique_ptr<MembershipModel>;

/// One Bloom filter over the (term, doc) pairs of scope terms, with
/// `bits_per_pair` bits per inserted pair and ceil(bits_per_pair * ln 2)
/// probes. Throws Error(kInvalidArgument) if bits_per_pair == 0.
[[nodiscard]] auto build_bloom_model(const InvertedIndex& index, const ModelScope& scope,
                                     std::uint32_t bits_per_pair) -> std::unique_ptr<MembershipModel>;

[[nodiscard]] auto bloom_hash_count(std::uint32_t bits_per_pair) -> std::uint32_t;

struct ModelCostParams {
    double s = 0.0;  // bits per modelled unit
};

/// (|R| + |D|) * s. Throws Error(kInvalidArgument) for negative or NaN s.
[[nodiscard]] auto model_storage_bits(ModelCostParams params, std::uint64_t replaced_count,
                                      std::uint64_t doc_count) -> double;

}  // namespace tbix
