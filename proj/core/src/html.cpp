// SPDX-License-Identifier: Apache-2.0
#include "archivelink/html.hpp"

#include <cctype>
#include <map>

#include "archivelink/detail/text.hpp"
#include "archivelink/url.hpp"

namespace archivelink {

using detail::ascii_lower;
using detail::normalize_whitespace;
using detail::starts_with_ci;

namespace {

struct Tag {
    std::string name;        // lowercased
    bool closing = false;
    std::map<std::string, std::string> attrs;  // lowercased names
    std::size_t end = 0;     // offset just past '>'
};

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        std::size_t semi = s.find(';', i);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view name = s.substr(i + 1, semi - i - 1);
        if (name == "amp") out.push_back('&');
        else if (name == "lt") out.push_back('<');
        else if (name == "gt") out.push_back('>');
        else if (name == "quot") out.push_back('"');
        else if (name == "apos") out.push_back('\'');
        else if (name == "nbsp") out.push_back(' ');
        else if (!name.empty() && name[0] == '#') {
            long cp = 0;
            bool ok = false;
            if (name.size() > 1 && (name[1] == 'x' || name[1] == 'X')) {
                for (char c : name.substr(2)) {
                    if (!std::isxdigit(static_cast<unsigned char>(c))) { ok = false; break; }
                    cp = cp * 16 + (std::isdigit(static_cast<unsigned char>(c))
                                        ? c - '0'
                                        : ascii_lower(c) - 'a' + 10);
                    ok = true;
                }
            } else {
                for (char c : name.substr(1)) {
                    if (!std::isdigit(static_cast<unsigned char>(c))) { ok = false; break; }
                    cp = cp * 10 + (c - '0');
                    ok = true;
                }
            }
            if (ok && cp > 0 && cp < 0x110000) {
                // encode the code point back to UTF-8
                if (cp < 0x80) {
                    out.push_back(static_cast<char>(cp));
                } else if (cp < 0x800) {
                    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                } else if (cp < 0x10000) {
                    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                } else {
                    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                }
            } else {
                out.append(s.substr(i, semi - i + 1));
            }
        } else {
            out.append(s.substr(i, semi - i + 1));
            i = semi + 1;
            continue;
        }
        i = semi + 1;
    }
    return out;
}

// Parses the tag starting at `pos` (which points at '<'). Returns false for
// things that are not tags (comments, doctype, stray '<').
bool parse_tag(std::string_view html, std::size_t pos, Tag& tag) {
    std::size_t i = pos + 1;
    if (i >= html.size()) return false;
    tag.closing = html[i] == '/';
    if (tag.closing) ++i;
    if (i >= html.size() || !std::isalpha(static_cast<unsigned char>(html[i]))) return false;

    tag.name.clear();
    while (i < html.size() &&
           (std::isalnum(static_cast<unsigned char>(html[i])) || html[i] == '-')) {
        tag.name.push_back(ascii_lower(html[i]));
        ++i;
    }
    tag.attrs.clear();
    while (i < html.size() && html[i] != '>') {
        if (std::isspace(static_cast<unsigned char>(html[i])) || html[i] == '/') {
            ++i;
            continue;
        }
        std::string attr_name;
        while (i < html.size() && html[i] != '=' && html[i] != '>' && html[i] != '/' &&
               !std::isspace(static_cast<unsigned char>(html[i]))) {
            attr_name.push_back(ascii_lower(html[i]));
            ++i;
        }
        while (i < html.size() && std::isspace(static_cast<unsigned char>(html[i]))) ++i;
        std::string value;
        if (i < html.size() && html[i] == '=') {
            ++i;
            while (i < html.size() && std::isspace(static_cast<unsigned char>(html[i]))) ++i;
            if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
                char quote = html[i++];
                while (i < html.size() && html[i] != quote) value.push_back(html[i++]);
                if (i < html.size()) ++i;
            } else {
                while (i < html.size() && html[i] != '>' &&
                       !std::isspace(static_cast<unsigned char>(html[i]))) {
                    value.push_back(html[i++]);
                }
            }
        }
        if (!attr_name.empty()) tag.attrs.emplace(std::move(attr_name), std::move(value));
    }
    tag.end = (i < html.size()) ? i + 1 : html.size();
    return true;
}

// Walks the markup, invoking on_tag for every real tag and on_text for the
// character data between tags. Comments and script/style content are skipped.
template <typename TagFn, typename TextFn>
void walk(std::string_view html, TagFn&& on_tag, TextFn&& on_text) {
    std::size_t pos = 0;
    while (pos < html.size()) {
        std::size_t lt = html.find('<', pos);
        if (lt == std::string_view::npos) {
            on_text(html.substr(pos));
            return;
        }
        if (lt > pos) on_text(html.substr(pos, lt - pos));

        if (starts_with_ci(html.substr(lt), "<!--")) {
            std::size_t close = html.find("-->", lt + 4);
            pos = (close == std::string_view::npos) ? html.size() : close + 3;
            continue;
        }
        if (lt + 1 < html.size() && (html[lt + 1] == '!' || html[lt + 1] == '?')) {
            std::size_t close = html.find('>', lt);
            pos = (close == std::string_view::npos) ? html.size() : close + 1;
            continue;
        }
        Tag tag;
        if (!parse_tag(html, lt, tag)) {
            on_text(html.substr(lt, 1));
            pos = lt + 1;
            continue;
        }
        pos = tag.end;
        if (!tag.closing && (tag.name == "script" || tag.name == "style")) {
            std::string close = "</" + tag.name;
            std::size_t idx = pos;
            while (idx < html.size()) {
                if (starts_with_ci(html.substr(idx), close)) break;
                ++idx;
            }
            std::size_t gt = html.find('>', idx);
            pos = (gt == std::string_view::npos) ? html.size() : gt + 1;
            continue;
        }
        on_tag(tag);
    }
}

}  // namespace

std::vector<LinkRef> extract_links(std::string_view html, std::string_view base_url) {
    std::vector<LinkRef> links;
    bool in_anchor = false;
    std::string href;
    std::string text;

    auto flush = [&]() {
        if (!in_anchor) return;
        in_anchor = false;
        if (href.empty()) return;
        std::string resolved;
        try {
            resolved = resolve_reference(base_url, href);
        } catch (...) {
            resolved = href;  // keep the raw target when the base is unusable
        }
        links.push_back(LinkRef{std::move(resolved),
                                normalize_whitespace(decode_entities(text))});
    };

    walk(
        html,
        [&](const Tag& tag) {
            if (tag.name == "a") {
                if (tag.closing) {
                    flush();
                } else {
                    flush();  // implicitly closes a dangling anchor
                    in_anchor = true;
                    text.clear();
                    auto it = tag.attrs.find("href");
                    href = (it == tag.attrs.end()) ? std::string{} : it->second;
                }
            } else if (in_anchor && !tag.closing &&
                       (tag.name == "br" || tag.name == "p" || tag.name == "li")) {
                text.push_back(' ');
            }
        },
        [&](std::string_view chunk) {
            if (in_anchor) text.append(chunk);
        });
    flush();
    return links;
}

std::vector<std::string> extract_headings(std::string_view html) {
    std::vector<std::string> headings;
    bool in_heading = false;
    std::string text;

    auto is_heading_tag = [](const std::string& name) {
        return name.size() == 2 && name[0] == 'h' && name[1] >= '1' && name[1] <= '6';
    };

    walk(
        html,
        [&](const Tag& tag) {
            if (!is_heading_tag(tag.name)) return;
            if (tag.closing) {
                if (in_heading) {
                    headings.push_back(normalize_whitespace(decode_entities(text)));
                    in_heading = false;
                }
            } else {
                in_heading = true;
                text.clear();
            }
        },
        [&](std::string_view chunk) {
            if (in_heading) text.append(chunk);
        });
    return headings;
}

}  // namespace archivelink
