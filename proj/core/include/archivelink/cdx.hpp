// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace archivelink {

/// One archived snapshot of a URL, as described by a CDX index line.
struct Capture {
    std::string urlkey;     // canonical SURT key
    std::string timestamp;  // 14 digits, YYYYMMDDhhmmss (UTC)
    std::string original;   // the URL as crawled
    std::string mimetype;
    std::optional<int> statuscode;  // absent when the index records "-"
    std::string digest;             // base32 content digest
    std::optional<long> length;

    int year() const;  // calendar year of the timestamp

    bool operator==(const Capture&) const = default;
};

/// Captures of one or more urlkeys, sorted ascending by (timestamp, digest).
struct TimeMap {
    std::vector<std::string> urlkeys;  // queried keys, deduplicated, sorted
    std::vector<Capture> captures;

    bool empty() const { return captures.empty(); }
    std::size_t size() const { return captures.size(); }

    /// Builds a TimeMap, sorting captures and deduplicating urlkeys.
    static TimeMap build(std::vector<std::string> urlkeys, std::vector<Capture> captures);
};

/// Recommended capture ordering: timestamp, then digest.
bool capture_less(const Capture& a, const Capture& b);

/// Checks a 14-digit timestamp for shape and calendar validity.
bool is_valid_timestamp(std::string_view ts);

/// Parses one space-separated CDX line with at least the seven standard
/// fields (urlkey timestamp original mimetype statuscode digest length);
/// extra trailing fields are ignored and "-" marks an absent value.
/// Throws ParseError on a wrong field count or an invalid timestamp.
Capture parse_cdx_line(std::string_view line);

/// Renders a Capture back to its seven-field CDX line.
std::string format_cdx_line(const Capture& c);

/// Union of two TimeMaps: captures equal in (urlkey, timestamp, digest) are
/// merged into one entry, sortedness is preserved.
TimeMap merge_timemaps(const TimeMap& a, const TimeMap& b);

}  // namespace archivelink
