// SPDX-License-Identifier: Apache-2.0
#include "archivelink/surt.hpp"

#include <algorithm>
#include <vector>

#include "archivelink/url.hpp"

namespace archivelink {

namespace {

bool is_hex_digit(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// "%2f" -> "%2F"; malformed escapes pass through untouched.
std::string uppercase_percent_escapes(std::string_view s) {
    std::string out(s);
    for (std::size_t i = 0; i + 2 < out.size(); ++i) {
        if (out[i] == '%' && is_hex_digit(out[i + 1]) && is_hex_digit(out[i + 2])) {
            out[i + 1] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[i + 1])));
            out[i + 2] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[i + 2])));
            i += 2;
        }
    }
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            return parts;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::string canonicalize_url(std::string_view url) {
    ParsedUrl u = parse_http_url(url);

    std::vector<std::string> labels = split(u.host, '.');
    if (labels.size() > 1 && labels.front() == "www") {
        labels.erase(labels.begin());
    }
    std::string key;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
        if (it != labels.rbegin()) key.push_back(',');
        key += *it;
    }
    // The key carries no scheme, so both well-known ports are dropped
    // unconditionally; anything else is kept.
    if (u.port && *u.port != 80 && *u.port != 443) {
        key += ":" + std::to_string(*u.port);
    }
    key.push_back(')');

    std::string path = u.path.empty() ? "/" : uppercase_percent_escapes(u.path);
    while (path.size() > 1 && path.back() == '/') path.pop_back();
    key += path;

    if (u.query) {
        std::vector<std::string> params = split(uppercase_percent_escapes(*u.query), '&');
        params.erase(std::remove(params.begin(), params.end(), std::string{}), params.end());
        if (!params.empty()) {
            std::sort(params.begin(), params.end());
            key.push_back('?');
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i > 0) key.push_back('&');
                key += params[i];
            }
        }
    }
    return key;
}

}  // namespace archivelink
