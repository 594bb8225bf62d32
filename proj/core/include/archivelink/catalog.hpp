// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace archivelink {

/// One software entry: its identity, homepage URL history (first entry is
/// the current homepage) and the publications that mention it.
struct SoftwareRecord {
    std::string id;
    std::string name;
    std::vector<std::string> aliases;
    std::vector<std::string> urls;
    std::vector<std::string> publication_ids;

    bool operator==(const SoftwareRecord&) const = default;
};

/// One bibliographic item with the text fields the mention heuristic scans.
struct PublicationRecord {
    std::string id;
    std::string title;
    std::string abstract;
    std::vector<std::string> references;
    int year = 0;
    long citations = 0;

    bool operator==(const PublicationRecord&) const = default;
};

/// Validated, immutable view over both catalog files. Iteration order is the
/// input file order, so downstream stages are deterministic. Safe to share
/// read-only across threads after construction.
class CatalogIndex {
public:
    CatalogIndex(std::vector<SoftwareRecord> softwares,
                 std::vector<PublicationRecord> publications);

    const std::vector<SoftwareRecord>& softwares() const { return softwares_; }
    const std::vector<PublicationRecord>& publications() const { return publications_; }

    const SoftwareRecord* find_software(const std::string& id) const;
    const PublicationRecord* find_publication(const std::string& id) const;

    bool operator==(const CatalogIndex& other) const {
        return softwares_ == other.softwares_ && publications_ == other.publications_;
    }

private:
    std::vector<SoftwareRecord> softwares_;
    std::vector<PublicationRecord> publications_;
    std::unordered_map<std::string, std::size_t> software_by_id_;
    std::unordered_map<std::string, std::size_t> publication_by_id_;
};

/// Loads and validates both JSON-lines catalog files. Parse failures carry
/// the file and line; validation failures (duplicate id, dangling
/// publication_id, invalid URL, year/citation range) name the offending
/// record. Missing files raise IoError.
CatalogIndex load_catalog(const std::string& software_path,
                          const std::string& publications_path);

/// Re-serializes records to the JSON-lines interchange form, one object per
/// line, fields in schema order. load/emit round-trips to an equal index.
std::string emit_software_jsonl(const std::vector<SoftwareRecord>& softwares);
std::string emit_publications_jsonl(const std::vector<PublicationRecord>& publications);

/// The publication backing the temporal analysis for `sw`: maximal citation
/// count, ties broken by earliest year, then smallest id. Throws
/// ValidationError when the software lists no publications.
const PublicationRecord& top_publication(const SoftwareRecord& sw, const CatalogIndex& index);

}  // namespace archivelink
