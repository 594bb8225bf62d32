// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <fstream>
#include <random>

#include "archivelink/cdx.hpp"
#include "archivelink/errors.hpp"
#include "support/test_support.hpp"

using namespace archivelink;

TEST_CASE("parse_cdx_line maps fields positionally") {
    Capture c = parse_cdx_line(
        "org,example,solverx)/ 20130214120000 http://solverx.example.org/ text/html 200 "
        "AAAAQX3JM5K7 5120");
    CHECK(c.urlkey == "org,example,solverx)/");
    CHECK(c.timestamp == "20130214120000");
    CHECK(c.original == "http://solverx.example.org/");
    CHECK(c.mimetype == "text/html");
    REQUIRE(c.statuscode.has_value());
    CHECK(*c.statuscode == 200);
    CHECK(c.digest == "AAAAQX3JM5K7");
    REQUIRE(c.length.has_value());
    CHECK(*c.length == 5120);
    CHECK(c.year() == 2013);
}

TEST_CASE("parse_cdx_line treats dash as absent") {
    Capture c = parse_cdx_line(
        "org,example)/ 20150601000000 http://example.org/ warc/revisit - BBBB2222CCCC -");
    CHECK_FALSE(c.statuscode.has_value());
    CHECK_FALSE(c.length.has_value());
    CHECK(c.digest == "BBBB2222CCCC");
}

TEST_CASE("parse_cdx_line rejects malformed lines") {
    CHECK_THROWS_AS(parse_cdx_line("too few fields"), ParseError);
    CHECK_THROWS_AS(parse_cdx_line("k 2013021412000 u m 200 D 1"), ParseError);   // 13 digits
    CHECK_THROWS_AS(parse_cdx_line("k 20131314120000 u m 200 D 1"), ParseError);  // month 13
    CHECK_THROWS_AS(parse_cdx_line("k 20130214120000 u m abc D 1"), ParseError);
    CHECK_THROWS_AS(parse_cdx_line("k 20130214120000 u m 200 - 1"), ParseError);  // no digest
    CHECK_THROWS_AS(parse_cdx_line("k 20130214120000 u m 200 D 99999999999999999999999999"),
                    ParseError);
}

TEST_CASE("extra CDX fields are tolerated") {
    Capture c = parse_cdx_line("k 20130214120000 u m 200 D 1 extra more fields");
    CHECK(c.digest == "D");
}

TEST_CASE("timestamp validity follows the calendar") {
    CHECK(is_valid_timestamp("20000229000000"));        // leap year
    CHECK_FALSE(is_valid_timestamp("19000229000000"));  // century, not leap
    CHECK(is_valid_timestamp("20001231235959"));
    CHECK_FALSE(is_valid_timestamp("20130229000000"));
    CHECK_FALSE(is_valid_timestamp("20130100000000"));  // day 0
    CHECK_FALSE(is_valid_timestamp("20130214240000"));
    CHECK_FALSE(is_valid_timestamp("2013021412000"));
    CHECK_FALSE(is_valid_timestamp("2013021412000a"));
}

TEST_CASE("fixture CDX lines round-trip byte-exactly") {
    std::ifstream in(test_support::fixture_archive() + "/captures.cdx");
    REQUIRE(in.good());
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CHECK(format_cdx_line(parse_cdx_line(line)) == line);
        ++count;
    }
    CHECK(count > 30);
}

namespace {

Capture make(const std::string& ts, const std::string& digest,
             const std::string& key = "k)/") {
    Capture c;
    c.urlkey = key;
    c.timestamp = ts;
    c.original = "http://k/";
    c.mimetype = "text/html";
    c.statuscode = 200;
    c.digest = digest;
    c.length = 1;
    return c;
}

}  // namespace

TEST_CASE("TimeMap::build sorts by timestamp then digest") {
    TimeMap tm = TimeMap::build({"k)/", "k)/"},
                                {make("20150101000000", "B"), make("20130101000000", "Z"),
                                 make("20150101000000", "A")});
    CHECK(tm.urlkeys == std::vector<std::string>{"k)/"});
    REQUIRE(tm.size() == 3);
    CHECK(tm.captures[0].timestamp == "20130101000000");
    CHECK(tm.captures[1].digest == "A");
    CHECK(tm.captures[2].digest == "B");
}

TEST_CASE("merge_timemaps unions and deduplicates") {
    TimeMap a = TimeMap::build({"a)/"}, {make("20130101000000", "X", "a)/"),
                                         make("20150101000000", "Y", "a)/")});
    TimeMap b = TimeMap::build({"b)/"}, {make("20140101000000", "Z", "b)/"),
                                         make("20130101000000", "X", "a)/")});
    TimeMap merged = merge_timemaps(a, b);
    CHECK(merged.urlkeys == std::vector<std::string>{"a)/", "b)/"});
    REQUIRE(merged.size() == 3);  // the duplicate (a)/, 2013, X) collapses
    CHECK(merged.captures[0].digest == "X");
    CHECK(merged.captures[1].digest == "Z");
    CHECK(merged.captures[2].digest == "Y");
}

TEST_CASE("merging random TimeMaps preserves sortedness") {
    std::mt19937 rng(42);
    auto random_timemap = [&](const std::string& key) {
        std::vector<Capture> caps;
        int n = static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) {
            int year = 2000 + static_cast<int>(rng() % 20);
            char month = static_cast<char>('1' + rng() % 9);
            std::string ts = std::to_string(year) + "0" + month + "01000000";
            caps.push_back(make(ts, std::string(1, static_cast<char>('A' + rng() % 26)), key));
        }
        return TimeMap::build({key}, std::move(caps));
    };
    for (int round = 0; round < 200; ++round) {
        TimeMap merged = merge_timemaps(random_timemap("x)/"), random_timemap("y)/"));
        for (std::size_t i = 1; i < merged.size(); ++i) {
            CHECK_FALSE(capture_less(merged.captures[i], merged.captures[i - 1]));
        }
    }
}
