// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archivelink/archive_client.hpp"
#include "archivelink/catalog.hpp"
#include "archivelink/cdx.hpp"

namespace archivelink {

/// Archival verdict relative to the top publication year. The values are
/// nested: past_archived implies a capture exists (archived), which implies
/// the strictest applicable one is reported.
enum class LinkStatus { not_archived, archived, past_archived };

std::string_view to_string(LinkStatus status);
LinkStatus link_status_from_string(std::string_view s);

/// Per-software result of the temporal linking pass.
///
/// `witness_in_year` is the last OK capture within the top publication year
/// (present exactly when status is past_archived); `witness_later` is the
/// earliest strictly later capture whose digest differs (present exactly
/// when changed). `total_captures` counts the captures that survived status
/// filtering, over all of the software's URLs.
struct LinkResult {
    std::string software_id;
    std::string top_publication_id;
    int top_year = 0;
    LinkStatus status = LinkStatus::not_archived;
    bool changed = false;
    std::optional<Capture> witness_in_year;
    std::optional<Capture> witness_later;
    long total_captures = 0;

    bool operator==(const LinkResult&) const = default;
};

/// Keeps captures whose statuscode is 200 or absent; redirects and error
/// responses are not witnesses of page content. Order preserved.
TimeMap ok_captures(const TimeMap& tm);

/// past_archived if any capture falls in top_year (UTC calendar year),
/// archived if any capture exists at all, else not_archived. Expects the
/// merged, status-filtered TimeMap of all of the software's URLs.
LinkStatus classify_archival(const TimeMap& tm_merged, int top_year);

struct ChangeWitness {
    bool changed = false;
    Capture witness_in_year;
    std::optional<Capture> witness_later;
};

/// For a past_archived TimeMap: the last in-year capture is the witness of
/// the page state at publication time; changed is true iff some strictly
/// later capture has a different digest, with the earliest such capture as
/// the later witness. Throws PreconditionError when no capture falls in
/// top_year.
ChangeWitness detect_change(const TimeMap& tm_merged, int top_year);

/// Full per-software pass: top publication, capture lookup over every
/// listed URL (unbounded), merge, status filter, classification and change
/// detection. `keep_all_statuses` disables the OK filter. Deterministic
/// given the backend contents; errors are annotated with the software id.
LinkResult link_software(const SoftwareRecord& sw, const CatalogIndex& index,
                         ArchiveClient& client, bool keep_all_statuses = false);

/// Outcome of one software in a batch run: a result or an error message.
struct LinkOutcome {
    std::string software_id;
    std::optional<LinkResult> result;
    std::string error;       // set when result is absent
    bool network_error = false;
};

/// Runs link_software over the whole catalog on `workers` threads. Outcomes
/// are returned in catalog order regardless of completion order; per-software
/// failures are captured, never thrown.
std::vector<LinkOutcome> link_all(const CatalogIndex& index, ArchiveClient& client,
                                  int workers, bool keep_all_statuses = false);

}  // namespace archivelink
