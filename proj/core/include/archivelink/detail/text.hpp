// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace archivelink::detail {

// Decodes one UTF-8 code point starting at `pos`. Advances `pos` past it.
// Invalid byte sequences are consumed one byte at a time and reported as
// that byte's value, so malformed input never stalls the caller.
std::uint32_t decode_utf8(std::string_view s, std::size_t& pos);

// Unicode whitespace, including the usual ASCII set, NEL, NBSP and the
// general-category Zs/Zl/Zp code points.
bool is_unicode_space(std::uint32_t cp);

// Punctuation that gets stripped from token edges. Follows the Unicode
// general categories P* for ASCII plus the common typographic marks, which
// means '+', '=', '<', '>' and similar symbol characters are kept.
bool is_edge_punctuation(std::uint32_t cp);

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string to_lower_ascii(std::string_view s);

// Collapses whitespace runs to single spaces and trims the ends.
std::string normalize_whitespace(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

}  // namespace archivelink::detail
