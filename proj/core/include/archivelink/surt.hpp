// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace archivelink {

/// Canonicalizes an absolute http(s) URL into its SURT urlkey, the form CDX
/// indexes are keyed by. Rules applied, in order:
///   - scheme and host lowercased, scheme and userinfo dropped
///   - one leading "www" host label stripped (when more labels remain)
///   - host labels reversed and joined with commas; a non-default port is
///     kept as ",host:port"; default ports (80/443) dropped
///   - ")" appended, then the path; trailing slashes stripped except at the
///     path root ("/" stays, "/docs/" becomes "/docs")
///   - fragment dropped; query parameters split on "&", empties dropped,
///     sorted bytewise, and re-joined after "?"
///   - percent-escapes in path and query normalized to uppercase hex
///
/// Throws ValidationError when the input is not an absolute http(s) URL.
std::string canonicalize_url(std::string_view url);

}  // namespace archivelink
