// SPDX-License-Identifier: Apache-2.0
#include "archivelink/detail/text.hpp"

namespace archivelink::detail {

std::uint32_t decode_utf8(std::string_view s, std::size_t& pos) {
    const auto byte = [&](std::size_t i) -> std::uint32_t {
        return static_cast<unsigned char>(s[i]);
    };
    const std::uint32_t b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    auto continuation = [&](std::size_t i) {
        return i < s.size() && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && continuation(pos + 1)) {
        std::uint32_t cp = ((b0 & 0x1F) << 6) | (byte(pos + 1) & 0x3F);
        pos += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && continuation(pos + 1) && continuation(pos + 2)) {
        std::uint32_t cp = ((b0 & 0x0F) << 12) | ((byte(pos + 1) & 0x3F) << 6) |
                           (byte(pos + 2) & 0x3F);
        pos += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && continuation(pos + 1) && continuation(pos + 2) &&
        continuation(pos + 3)) {
        std::uint32_t cp = ((b0 & 0x07) << 18) | ((byte(pos + 1) & 0x3F) << 12) |
                           ((byte(pos + 2) & 0x3F) << 6) | (byte(pos + 3) & 0x3F);
        pos += 4;
        return cp;
    }
    ++pos;  // stray byte
    return b0;
}

bool is_unicode_space(std::uint32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85:    // NEL
        case 0xA0:    // NBSP
        case 0x1680:  // ogham space mark
        case 0x2028:  // line separator
        case 0x2029:  // paragraph separator
        case 0x202F:  // narrow no-break space
        case 0x205F:  // medium mathematical space
        case 0x3000:  // ideographic space
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_edge_punctuation(std::uint32_t cp) {
    if (cp < 0x80) {
        switch (static_cast<char>(cp)) {
            case '!': case '"': case '#': case '%': case '&': case '\'':
            case '(': case ')': case '*': case ',': case '-': case '.':
            case '/': case ':': case ';': case '?': case '@': case '[':
            case '\\': case ']': case '_': case '{': case '}':
                return true;
            default:
                return false;
        }
    }
    switch (cp) {
        case 0xA1:    // inverted exclamation
        case 0xAB:    // left guillemet
        case 0xBB:    // right guillemet
        case 0xBF:    // inverted question mark
        case 0x2026:  // ellipsis
            return true;
        default:
            // dashes and typographic quotes
            return (cp >= 0x2010 && cp <= 0x2015) || (cp >= 0x2018 && cp <= 0x201F);
    }
}

std::string to_lower_ascii(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(ascii_lower(c));
    return out;
}

std::string normalize_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t start = pos;
        std::uint32_t cp = decode_utf8(s, pos);
        if (is_unicode_space(cp)) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.append(s.substr(start, pos - start));
        }
    }
    return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (ascii_lower(s[i]) != ascii_lower(prefix[i])) return false;
    }
    return true;
}

}  // namespace archivelink::detail
