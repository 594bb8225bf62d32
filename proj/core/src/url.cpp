// SPDX-License-Identifier: Apache-2.0
#include "archivelink/url.hpp"

#include <algorithm>
#include <vector>

#include "archivelink/detail/text.hpp"
#include "archivelink/errors.hpp"

namespace archivelink {

using detail::ascii_lower;
using detail::to_lower_ascii;

namespace {

struct SplitUrl {
    std::string_view scheme;
    std::string_view authority;
    std::string_view path;
    std::optional<std::string_view> query;
    std::optional<std::string_view> fragment;
};

// Splits scheme://authority/path?query#fragment without validating. The
// scheme part is empty when the input has no scheme.
SplitUrl split_url(std::string_view url) {
    SplitUrl out;
    std::size_t scheme_end = 0;
    while (scheme_end < url.size() &&
           (std::isalnum(static_cast<unsigned char>(url[scheme_end])) ||
            url[scheme_end] == '+' || url[scheme_end] == '-' || url[scheme_end] == '.')) {
        ++scheme_end;
    }
    std::string_view rest = url;
    if (scheme_end > 0 && scheme_end < url.size() && url[scheme_end] == ':' &&
        std::isalpha(static_cast<unsigned char>(url[0]))) {
        out.scheme = url.substr(0, scheme_end);
        rest = url.substr(scheme_end + 1);
    }
    if (rest.substr(0, 2) == "//") {
        rest.remove_prefix(2);
        std::size_t auth_end = rest.find_first_of("/?#");
        out.authority = rest.substr(0, auth_end);
        rest = (auth_end == std::string_view::npos) ? std::string_view{} : rest.substr(auth_end);
    }
    std::size_t frag = rest.find('#');
    if (frag != std::string_view::npos) {
        out.fragment = rest.substr(frag + 1);
        rest = rest.substr(0, frag);
    }
    std::size_t q = rest.find('?');
    if (q != std::string_view::npos) {
        out.query = rest.substr(q + 1);
        rest = rest.substr(0, q);
    }
    out.path = rest;
    return out;
}

// Removes "." and ".." segments per RFC 3986 section 5.2.4.
std::string remove_dot_segments(std::string_view path) {
    std::string input(path);
    std::string output;
    while (!input.empty()) {
        if (input.rfind("../", 0) == 0) {
            input.erase(0, 3);
        } else if (input.rfind("./", 0) == 0) {
            input.erase(0, 2);
        } else if (input.rfind("/./", 0) == 0) {
            input.erase(0, 2);
        } else if (input == "/.") {
            input = "/";
        } else if (input.rfind("/../", 0) == 0) {
            input.erase(0, 3);
            std::size_t slash = output.find_last_of('/');
            output.erase(slash == std::string::npos ? 0 : slash);
        } else if (input == "/..") {
            input = "/";
            std::size_t slash = output.find_last_of('/');
            output.erase(slash == std::string::npos ? 0 : slash);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t next = input.find('/', 1);
            output.append(input.substr(0, next));
            input.erase(0, next == std::string::npos ? input.size() : next);
        }
    }
    return output;
}

std::string merge_paths(const ParsedUrl& base, std::string_view ref_path) {
    if (base.path.empty()) return "/" + std::string(ref_path);
    std::size_t slash = base.path.find_last_of('/');
    return base.path.substr(0, slash + 1) + std::string(ref_path);
}

std::string assemble(const ParsedUrl& u) {
    std::string out = u.scheme + "://" + u.host;
    if (u.port) out += ":" + std::to_string(*u.port);
    out += u.path;
    if (u.query) out += "?" + *u.query;
    if (u.fragment) out += "#" + *u.fragment;
    return out;
}

}  // namespace

ParsedUrl parse_http_url(std::string_view url) {
    SplitUrl raw = split_url(url);
    if (raw.scheme.empty()) {
        throw ValidationError("not an absolute URL: '" + std::string(url) + "'");
    }
    std::string scheme = to_lower_ascii(raw.scheme);
    if (scheme != "http" && scheme != "https") {
        throw ValidationError("unsupported scheme '" + scheme + "' in '" + std::string(url) + "'");
    }
    std::string_view authority = raw.authority;
    std::size_t at = authority.rfind('@');
    if (at != std::string_view::npos) authority.remove_prefix(at + 1);

    ParsedUrl out;
    out.scheme = std::move(scheme);
    std::size_t colon = authority.rfind(':');
    std::string_view host = authority;
    if (colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
        std::string_view port_str = authority.substr(colon + 1);
        host = authority.substr(0, colon);
        if (port_str.empty()) {
            // "host:" with no digits is treated as no explicit port
        } else {
            std::uint32_t port = 0;
            for (char c : port_str) {
                if (c < '0' || c > '9') {
                    throw ValidationError("bad port in '" + std::string(url) + "'");
                }
                port = port * 10 + static_cast<std::uint32_t>(c - '0');
                if (port > 65535) throw ValidationError("bad port in '" + std::string(url) + "'");
            }
            out.port = static_cast<std::uint16_t>(port);
        }
    }
    if (host.empty()) {
        throw ValidationError("empty host in '" + std::string(url) + "'");
    }
    out.host = to_lower_ascii(host);
    out.path = std::string(raw.path);
    if (raw.query) out.query = std::string(*raw.query);
    if (raw.fragment) out.fragment = std::string(*raw.fragment);
    return out;
}

bool is_valid_http_url(std::string_view url) {
    try {
        parse_http_url(url);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

std::string resolve_reference(std::string_view base, std::string_view ref) {
    SplitUrl r = split_url(ref);
    if (!r.scheme.empty()) {
        std::string scheme = to_lower_ascii(r.scheme);
        if (scheme != "http" && scheme != "https") return std::string(ref);
        ParsedUrl abs = parse_http_url(ref);
        abs.path = remove_dot_segments(abs.path);
        return assemble(abs);
    }

    ParsedUrl b = parse_http_url(base);
    ParsedUrl out = b;
    out.fragment.reset();
    if (!r.authority.empty()) {
        // network-path reference: //host/path
        std::string with_scheme = b.scheme + ":" + std::string(ref);
        ParsedUrl abs = parse_http_url(with_scheme);
        abs.path = remove_dot_segments(abs.path);
        return assemble(abs);
    }
    if (r.path.empty()) {
        if (r.query) out.query = std::string(*r.query);
    } else {
        if (r.path.front() == '/') {
            out.path = remove_dot_segments(r.path);
        } else {
            out.path = remove_dot_segments(merge_paths(b, r.path));
        }
        out.query = r.query ? std::optional<std::string>(std::string(*r.query)) : std::nullopt;
    }
    if (r.fragment) out.fragment = std::string(*r.fragment);
    return assemble(out);
}

std::string percent_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size() * 3);
    for (char c : s) {
        bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                          (c >= '0' && c <= '9') || c == '-' || c == '.' ||
                          c == '_' || c == '~';
        if (unreserved) {
            out.push_back(c);
        } else {
            unsigned char b = static_cast<unsigned char>(c);
            out.push_back('%');
            out.push_back(hex[b >> 4]);
            out.push_back(hex[b & 0xF]);
        }
    }
    return out;
}

}  // namespace archivelink
