// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace archivelink {

/// One anchor from a page: the target resolved against the page URL and the
/// whitespace-normalized anchor text.
struct LinkRef {
    std::string href;
    std::string text;

    bool operator==(const LinkRef&) const = default;
};

/// Pulls all anchors out of possibly broken markup. Never throws: comments,
/// script/style bodies and CDATA are skipped, unterminated tags are handled
/// best-effort, and unparseable input yields an empty list. Entity
/// references in anchor text are decoded. Document order.
std::vector<LinkRef> extract_links(std::string_view html, std::string_view base_url);

/// h1..h6 texts, whitespace-normalized, document order. Same tolerance as
/// extract_links.
std::vector<std::string> extract_headings(std::string_view html);

}  // namespace archivelink
