// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "archivelink/cdx.hpp"

namespace archivelink {

/// Converts an RFC 1123 datetime ("Tue, 14 Feb 2013 12:00:00 GMT", weekday
/// optional) into the 14-digit archive timestamp form. Throws ParseError on
/// anything it cannot read.
std::string rfc1123_to_timestamp(std::string_view datetime);

/// Parses an application/link-format TimeMap body into a TimeMap. Only
/// entries carrying rel="memento" (alone or within a rel list) and a
/// datetime attribute become captures; link-format carries no content
/// digest, so one is synthesized as "TM-" + timestamp. Throws ParseError on
/// malformed documents (unclosed URI bracket, missing datetime).
TimeMap parse_timemap_linkformat(std::string_view body, std::string_view urlkey);

}  // namespace archivelink
