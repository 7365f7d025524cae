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

#include "tbix/error.hpp"

#include <sstream>

namespace tbix {

namespace {

auto encoding_message(std::size_t line, std::size_t byte_offset) -> std::string
{
    std::ostringstream os;
    os << "invalid UTF-8 at line " << line << ", byte offset " << byte_offset;
    return os.str();
}

auto format_message(const std::string& path, std::uint64_t offset, const std::string& reason)
    -> std::string
{
    std::ostringstream os;
    os << path << ": offset " << offset << ": " << reason;
    return os.str();
}

auto unknown_message(const std::vector<std::string>& tokens) -> std::string
{
    std::string msg = "unknown query term";
    if (tokens.size() > 1) {
        msg += 's';
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        msg += i == 0 ? ": " : ", ";
        msg += tokens[i];
    }
    return msg;
}

}  // namespace

EncodingError::EncodingError(std::size_t line, std::size_t byte_offset)
    : Error(ErrorCode::kEncoding, encoding_message(line, byte_offset)),
      line_(line),
      byte_offset_(byte_offset)
{}

FormatError::FormatError(std::string path, std::uint64_t offset, const std::string& reason)
    : Error(ErrorCode::kFormat, format_message(path, offset, reason)),
      path_(std::move(path)),
      offset_(offset),
      reason_(reason)
{}

UnknownTermsError::UnknownTermsError(std::vector<std::string> tokens)
    : Error(ErrorCode::kUnknownTerms, unknown_message(tokens)), tokens_(std::move(tokens))
{}

ScopeError::ScopeError(TermId term)
    : Error(ErrorCode::kScope,
            "membership model does not cover term id " + std::to_string(term)),
      term_(term)
{}

}  // namespace tbix
