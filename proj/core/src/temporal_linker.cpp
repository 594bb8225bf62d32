// SPDX-License-Identifier: Apache-2.0
#include "archivelink/temporal_linker.hpp"

#include <atomic>
#include <thread>

#include "archivelink/errors.hpp"

namespace archivelink {

std::string_view to_string(LinkStatus status) {
    switch (status) {
        case LinkStatus::not_archived: return "not_archived";
        case LinkStatus::archived: return "archived";
        case LinkStatus::past_archived: return "past_archived";
    }
    return "?";
}

LinkStatus link_status_from_string(std::string_view s) {
    if (s == "not_archived") return LinkStatus::not_archived;
    if (s == "archived") return LinkStatus::archived;
    if (s == "past_archived") return LinkStatus::past_archived;
    throw ValidationError("unknown link status '" + std::string(s) + "'");
}

TimeMap ok_captures(const TimeMap& tm) {
    TimeMap out;
    out.urlkeys = tm.urlkeys;
    for (const Capture& c : tm.captures) {
        if (!c.statuscode || *c.statuscode == 200) out.captures.push_back(c);
    }
    return out;
}

LinkStatus classify_archival(const TimeMap& tm_merged, int top_year) {
    if (tm_merged.empty()) return LinkStatus::not_archived;
    for (const Capture& c : tm_merged.captures) {
        if (c.year() == top_year) return LinkStatus::past_archived;
    }
    return LinkStatus::archived;
}

ChangeWitness detect_change(const TimeMap& tm_merged, int top_year) {
    const Capture* witness = nullptr;
    for (const Capture& c : tm_merged.captures) {
        if (c.year() == top_year) witness = &c;  // captures are ascending
    }
    if (witness == nullptr) {
        throw PreconditionError("detect_change: no capture in year " +
                                std::to_string(top_year));
    }
    ChangeWitness out;
    out.witness_in_year = *witness;
    for (const Capture& c : tm_merged.captures) {
        if (c.timestamp <= witness->timestamp) continue;
        if (c.digest != witness->digest) {
            out.changed = true;
            out.witness_later = c;
            break;
        }
    }
    return out;
}

LinkResult link_software(const SoftwareRecord& sw, const CatalogIndex& index,
                         ArchiveClient& client, bool keep_all_statuses) {
    const PublicationRecord& top = top_publication(sw, index);

    TimeMap merged;
    for (const std::string& url : sw.urls) {
        merged = merge_timemaps(merged, client.query_captures(url));
    }
    TimeMap usable = keep_all_statuses ? merged : ok_captures(merged);

    LinkResult result;
    result.software_id = sw.id;
    result.top_publication_id = top.id;
    result.top_year = top.year;
    result.total_captures = static_cast<long>(usable.size());
    result.status = classify_archival(usable, top.year);
    if (result.status == LinkStatus::past_archived) {
        ChangeWitness change = detect_change(usable, top.year);
        result.changed = change.changed;
        result.witness_in_year = change.witness_in_year;
        result.witness_later = change.witness_later;
    }
    return result;
}

std::vector<LinkOutcome> link_all(const CatalogIndex& index, ArchiveClient& client,
                                  int workers, bool keep_all_statuses) {
    const auto& softwares = index.softwares();
    std::vector<LinkOutcome> outcomes(softwares.size());
    std::atomic<std::size_t> cursor{0};

    auto worker = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= softwares.size()) return;
            LinkOutcome& outcome = outcomes[i];
            outcome.software_id = softwares[i].id;
            try {
                outcome.result = link_software(softwares[i], index, client, keep_all_statuses);
            } catch (const NetworkError& e) {
                outcome.error = softwares[i].id + ": " + e.what();
                outcome.network_error = true;
            } catch (const std::exception& e) {
                outcome.error = softwares[i].id + ": " + e.what();
            }
        }
    };

    int thread_count = std::max(1, workers);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return outcomes;
}

}  // namespace archivelink
