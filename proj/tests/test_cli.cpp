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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {
namespace fs = std::filesystem;

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
auto tbix(const std::string& args) -> Run
{
    std::string cmd = std::string(TBIX_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

auto read_file(const fs::path& p) -> std::string
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct Workspace {
    fs::path dir = fs::current_path() / "cli_work";
    Workspace()
    {
        fs::create_directories(dir);
        write_file(dir / "corpus.txt", "the cat sat\nthe dog sat\na cat ran\n");
        write_file(dir / "queries.txt", "cat sat\na cat\nthe cat\nzebra\n");
    }
    auto path(const char* name) const -> std::string { return (dir / name).string(); }
};
}  // namespace

TEST_CASE("build, stats and query")
{
    Workspace ws;
    auto built = tbix("build --corpus " + ws.path("corpus.txt") + " --out " + ws.path("a.tbix"));
    REQUIRE(built.status == 0);
    CHECK(built.out.find("\"total_bits\":72") != std::string::npos);

    auto stats = tbix("stats --index " + ws.path("a.tbix"));
    CHECK(stats.status == 0);
    CHECK(stats.out.rfind("metric,key,value\n", 0) == 0);
    CHECK(stats.out.find("total_bits,,72") != std::string::npos);
    CHECK(stats.out.find("df_terms,1,3") != std::string::npos);

    auto q = tbix("query --index " + ws.path("a.tbix") + " --queries " + ws.path("queries.txt") +
                  " --strategy oracle");
    CHECK(q.status == 0);
    CHECK(q.out.find("\"query\":\"cat sat\",\"docids\":[0]") != std::string::npos);
    CHECK(q.out.find("\"unknown\":[\"zebra\"]") != std::string::npos);

    for (const char* strategy : {"exhaustive", "tiered --k 1 --fallback", "block --beta 2"}) {
        auto other = tbix("query --index " + ws.path("a.tbix") + " --queries " +
                          ws.path("queries.txt") + " --strategy " + strategy);
        CHECK(other.status == 0);
        CHECK(other.out.find("\"query\":\"cat sat\",\"docids\":[0]") != std::string::npos);
    }
}

TEST_CASE("gain and guarantees tables")
{
    Workspace ws;
    REQUIRE(tbix("build --corpus " + ws.path("corpus.txt") + " --out " + ws.path("g.tbix")).status == 0);
    auto g = tbix("gain --index " + ws.path("g.tbix") + " --ks 1 --s 0");
    CHECK(g.status == 0);
    CHECK(g.out.find("\n1,3,8,18,") != std::string::npos);

    auto bounds = tbix("gain --index " + ws.path("g.tbix") + " --ks 1,max");
    CHECK(bounds.status == 0);
    CHECK(bounds.out.find("-3054") != std::string::npos);

    auto gu = tbix("guarantees --index " + ws.path("g.tbix") + " --queries " +
                   ws.path("queries.txt") + " --ks 1,max");
    CHECK(gu.status == 0);
    CHECK(gu.out.rfind("k,pct_with,pct_without,queries\n", 0) == 0);
}

TEST_CASE("tier and blocks persist sections")
{
    Workspace ws;
    REQUIRE(tbix("build --corpus " + ws.path("corpus.txt") + " --out " + ws.path("t.tbix")).status == 0);
    REQUIRE(tbix("tier --index " + ws.path("t.tbix") + " --k 1").status == 0);
    REQUIRE(tbix("blocks --index " + ws.path("t.tbix") + " --beta 2 --out " + ws.path("tb.tbix")).status == 0);
    auto q = tbix("query --index " + ws.path("tb.tbix") + " --queries " + ws.path("queries.txt") +
                  " --strategy block");
    CHECK(q.status == 0);
    auto t = tbix("query --index " + ws.path("tb.tbix") + " --queries " + ws.path("queries.txt") +
                  " --strategy tiered");
    CHECK(t.status == 0);
    CHECK(t.out.find("\"query\":\"a cat\",\"docids\":[2]") != std::string::npos);
}

TEST_CASE("reruns are byte-identical")
{
    Workspace ws;
    REQUIRE(tbix("build --corpus " + ws.path("corpus.txt") + " --out " + ws.path("r1.tbix")).status == 0);
    REQUIRE(tbix("build --corpus " + ws.path("corpus.txt") + " --out " + ws.path("r2.tbix")).status == 0);
    CHECK(read_file(ws.path("r1.tbix")) == read_file(ws.path("r2.tbix")));
    auto a = tbix("query --index " + ws.path("r1.tbix") + " --queries " + ws.path("queries.txt") +
                  " --strategy exhaustive --model bloom --bits-per-pair 8");
    auto b = tbix("query --index " + ws.path("r2.tbix") + " --queries " + ws.path("queries.txt") +
                  " --strategy exhaustive --model bloom --bits-per-pair 8");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes")
{
    Workspace ws;
    CHECK(tbix("--help").status == 0);
    CHECK(tbix("selftest").status == 0);
    CHECK(tbix("").status == 1);
    CHECK(tbix("build --corpus " + ws.path("corpus.txt")).status == 1);
    CHECK(tbix("gain --index x --ks 0").status == 1);
    CHECK(tbix("query --index x --queries y --strategy bogus").status == 1);
    CHECK(tbix("query --index x --queries y --strategy oracle --fallback").status == 1);

    CHECK(tbix("build --corpus " + ws.path("missing.txt") + " --out " + ws.path("m.tbix")).status == 2);
    write_file(ws.dir / "bad.txt", "ok\n\xff\n");
    auto enc = tbix("build --corpus " + ws.path("bad.txt") + " --out " + ws.path("m.tbix"));
    CHECK(enc.status == 2);

    REQUIRE(tbix("build --corpus " + ws.path("corpus.txt") + " --out " + ws.path("c.tbix")).status == 0);
    auto bytes = read_file(ws.path("c.tbix"));
    write_file(ws.dir / "cut.tbix", bytes.substr(0, 20));
    auto cut = tbix("stats --index " + ws.path("cut.tbix"));
    CHECK(cut.status == 2);
    CHECK(cut.out.find("offset 20") != std::string::npos);
}
