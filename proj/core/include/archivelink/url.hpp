// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace archivelink {

/// Decomposed absolute http(s) URL. `path` keeps its leading slash ("" when
/// the URL has none), `query` and `fragment` are stored without their "?"/"#"
/// markers, and absence is distinct from emptiness.
struct ParsedUrl {
    std::string scheme;  // lowercased
    std::string host;    // lowercased, userinfo stripped
    std::optional<std::uint16_t> port;
    std::string path;
    std::optional<std::string> query;
    std::optional<std::string> fragment;

    bool is_default_port() const {
        if (!port) return true;
        return (scheme == "http" && *port == 80) || (scheme == "https" && *port == 443);
    }
};

/// Parses an absolute http(s) URL. Throws ValidationError for anything else
/// (missing scheme, non-http scheme, empty host, unparseable port).
ParsedUrl parse_http_url(std::string_view url);

/// True when parse_http_url would succeed.
bool is_valid_http_url(std::string_view url);

/// RFC 3986 reference resolution: resolves `ref` against the absolute URL
/// `base`. References that already carry a scheme are returned as-is (after
/// dot-segment removal for http/https). Used for turning hrefs from archived
/// pages into absolute targets.
std::string resolve_reference(std::string_view base, std::string_view ref);

/// Percent-encodes everything outside the RFC 3986 unreserved set. This is
/// the encoding used when the original URL is embedded as a query value in a
/// CDX API request.
std::string percent_encode(std::string_view s);

}  // namespace archivelink
