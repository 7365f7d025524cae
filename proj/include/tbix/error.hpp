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
#include <stdexcept>
#include <string>
#include <vector>

namespace tbix {

using DocId = std::uint32_t;
using TermId = std::uint32_t;

enum class ErrorCode {
    kInvalidArgument,
    kEmptyCorpus,
    kEncoding,
    kIo,
    kFormat,
    kDecode,
    kEmptyQuery,
    kUnknownTerms,
    kScope,
    kState,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] auto code() const noexcept -> ErrorCode { return code_; }

  private:
    ErrorCode code_;
};

/// Input text is not valid UTF-8. `line` is 1-based, `byte_offset` is the
/// offset of the offending byte from the start of the stream.
class EncodingError : public Error {
  public:
    EncodingError(std::size_t line, std::size_t byte_offset);
    [[nodiscard]] auto line() const noexcept { return line_; }
    [[nodiscard]] auto byte_offset() const noexcept { return byte_offset_; }

  private:
    std::size_t line_;
    std::size_t byte_offset_;
};

/// Malformed or truncated index container.
class FormatError : public Error {
  public:
    FormatError(std::string path, std::uint64_t offset, const std::string& reason);
    [[nodiscard]] auto path() const -> const std::string& { return path_; }
    [[nodiscard]] auto offset() const noexcept { return offset_; }
    [[nodiscard]] auto reason() const -> const std::string& { return reason_; }

  private:
    std::string path_;
    std::uint64_t offset_;
    std::string reason_;
};

class UnknownTermsError : public Error {
  public:
    explicit UnknownTermsError(std::vector<std::string> tokens);
    [[nodiscard]] auto tokens() const -> const std::vector<std::string>& { return tokens_; }

  private:
    std::vector<std::string> tokens_;
};

/// A membership model was asked about a term it does not answer for.
class ScopeError : public Error {
  public:
    explicit ScopeError(TermId term);
    [[nodiscard]] auto term() const noexcept { return term_; }

  private:
    TermId term_;
};

}  // namespace tbix
