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

#include <string>
#include <string_view>
#include <vector>

namespace tbix {

/// Three-document fixture: "the cat sat" / "the dog sat" / "a cat ran".
inline constexpr std::string_view kFixtureCorpus = "the cat sat\nthe dog sat\na cat ran\n";

struct SelftestCase {
    std::string name;
    bool passed = false;
    std::string detail;  // failure description, empty on success
};

/// Runs the fixture end-to-end: ingest, build, persist, partition, query with
/// all strategies, and the storage analyses.
[[nodiscard]] auto run_selftest() -> std::vector<SelftestCase>;

}  // namespace tbix
