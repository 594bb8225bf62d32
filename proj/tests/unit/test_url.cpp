// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "archivelink/errors.hpp"
#include "archivelink/url.hpp"

using namespace archivelink;

TEST_CASE("parse_http_url splits components") {
    ParsedUrl u = parse_http_url("HTTP://User:Pw@Example.ORG:8080/A/b?x=1&y=2#frag");
    CHECK(u.scheme == "http");
    CHECK(u.host == "example.org");
    REQUIRE(u.port.has_value());
    CHECK(*u.port == 8080);
    CHECK(u.path == "/A/b");
    REQUIRE(u.query.has_value());
    CHECK(*u.query == "x=1&y=2");
    REQUIRE(u.fragment.has_value());
    CHECK(*u.fragment == "frag");
    CHECK_FALSE(u.is_default_port());
}

TEST_CASE("parse_http_url rejects non-http input") {
    CHECK_THROWS_AS(parse_http_url("ftp://example.org/"), ValidationError);
    CHECK_THROWS_AS(parse_http_url("example.org/path"), ValidationError);
    CHECK_THROWS_AS(parse_http_url("http://"), ValidationError);
    CHECK_THROWS_AS(parse_http_url("http://host:99999/"), ValidationError);
    CHECK_THROWS_AS(parse_http_url(""), ValidationError);
    CHECK(is_valid_http_url("https://ok.example.net"));
    CHECK_FALSE(is_valid_http_url("mailto:x@y"));
}

TEST_CASE("default ports are recognized per scheme") {
    CHECK(parse_http_url("http://h:80/").is_default_port());
    CHECK(parse_http_url("https://h:443/").is_default_port());
    CHECK_FALSE(parse_http_url("http://h:443/").is_default_port());
    CHECK(parse_http_url("http://h/").is_default_port());
}

TEST_CASE("resolve_reference handles the RFC 3986 cases") {
    const std::string base = "http://x.org/a/b/";
    CHECK(resolve_reference(base, "../dl/v2.zip") == "http://x.org/a/dl/v2.zip");
    CHECK(resolve_reference("http://x.org/a/b", "../dl/v2.zip") == "http://x.org/dl/v2.zip");
    CHECK(resolve_reference(base, "c.html") == "http://x.org/a/b/c.html");
    CHECK(resolve_reference(base, "/top") == "http://x.org/top");
    CHECK(resolve_reference(base, "//other.org/p") == "http://other.org/p");
    CHECK(resolve_reference(base, "?q=1") == "http://x.org/a/b/?q=1");
    CHECK(resolve_reference(base, "#sec") == "http://x.org/a/b/#sec");
    CHECK(resolve_reference(base, "https://abs.org/z") == "https://abs.org/z");
    CHECK(resolve_reference(base, "./") == "http://x.org/a/b/");
    CHECK(resolve_reference(base, "mailto:a@b") == "mailto:a@b");
}

TEST_CASE("percent_encode keeps unreserved characters only") {
    CHECK(percent_encode("AZaz09-._~") == "AZaz09-._~");
    CHECK(percent_encode("a b/c?") == "a%20b%2Fc%3F");
    CHECK(percent_encode("http://x.org/") == "http%3A%2F%2Fx.org%2F");
}
