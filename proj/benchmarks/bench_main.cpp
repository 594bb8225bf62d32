// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "archivelink/cdx.hpp"
#include "archivelink/content_classifier.hpp"
#include "archivelink/html.hpp"
#include "archivelink/mention_miner.hpp"
#include "archivelink/surt.hpp"

namespace {

static void BM_CanonicalizeUrl(benchmark::State& state) {
    const std::string url = "HTTP://WWW.SolverX.example.org:80/path/index.html?b=2&a=1&c=3";
    for (auto _ : state) {
        benchmark::DoNotOptimize(archivelink::canonicalize_url(url));
    }
}
BENCHMARK(BM_CanonicalizeUrl);

static void BM_ParseCdxLine(benchmark::State& state) {
    const std::string line =
        "org,example,solverx)/ 20130214120000 http://solverx.example.org/ text/html 200 "
        "AAAAQX3JM5K7AAAAQX3JM5K7AAAAQX3J 5120";
    for (auto _ : state) {
        benchmark::DoNotOptimize(archivelink::parse_cdx_line(line));
    }
}
BENCHMARK(BM_ParseCdxLine);

static void BM_Tokenize(benchmark::State& state) {
    std::string text;
    for (int i = 0; i < state.range(0); ++i) {
        text += "We present SolverX, a software package for large structured problems. ";
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(archivelink::tokenize(text));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_Tokenize)->Range(1, 64);

static void BM_FindMentions(benchmark::State& state) {
    archivelink::PublicationRecord pub;
    pub.id = "p";
    pub.title = "SolverX: a fast solver for sparse polynomial systems";
    pub.abstract =
        "We present SolverX, a software package for large structured problems. "
        "Benchmarks against classical approaches show consistent gains.";
    pub.references = {"Doe, J.: The SolverX system reference manual (2013)"};
    std::map<std::string, std::string> names{{"solverx", "SolverX"}};
    archivelink::TriggerLexicon lex = archivelink::TriggerLexicon::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(archivelink::find_mentions(pub, names, lex));
    }
}
BENCHMARK(BM_FindMentions);

static void BM_ClassifyPage(benchmark::State& state) {
    std::string html =
        "<html><body><h1>SolverX</h1><ul>"
        "<li><a href=\"manual.html\">User Manual</a></li>"
        "<li><a href=\"https://doi.org/10.5555/x\">Journal article</a></li>"
        "<li><a href=\"files/solverx-2.0.tar.gz\">Download</a></li>"
        "<li><a href=\"https://github.com/mathsw/solverx\">Source code</a></li>"
        "<li><a href=\"changelog.html\">Changelog</a></li>"
        "</ul></body></html>";
    auto rules = archivelink::default_rules();
    for (auto _ : state) {
        benchmark::DoNotOptimize(archivelink::classify(html, "http://solverx.example.org/",
                                                       rules));
    }
}
BENCHMARK(BM_ClassifyPage);

}  // namespace

BENCHMARK_MAIN();
