// SPDX-License-Identifier: Apache-2.0
#include "archivelink/catalog.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "archivelink/errors.hpp"
#include "archivelink/url.hpp"

namespace archivelink {

using nlohmann::ordered_json;

namespace {

// Applies `fn` to each nonempty line. Lines are 1-based in errors.
template <typename Fn>
void for_each_line(const std::string& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(line_no, line);
    }
}

ordered_json parse_json_line(const std::string& path, std::size_t line_no,
                             const std::string& line) {
    ordered_json value = ordered_json::parse(line, nullptr, false);
    if (value.is_discarded() || !value.is_object()) {
        throw ParseError(path, line_no, "not a JSON object");
    }
    return value;
}

std::string require_string(const ordered_json& obj, const char* key,
                           const std::string& path, std::size_t line_no) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        throw ParseError(path, line_no, std::string("missing string field \"") + key + "\"");
    }
    return obj[key].get<std::string>();
}

std::vector<std::string> require_string_array(const ordered_json& obj, const char* key,
                                              const std::string& path, std::size_t line_no) {
    if (!obj.contains(key) || !obj[key].is_array()) {
        throw ParseError(path, line_no, std::string("missing array field \"") + key + "\"");
    }
    std::vector<std::string> out;
    for (const auto& item : obj[key]) {
        if (!item.is_string()) {
            throw ParseError(path, line_no, std::string("non-string entry in \"") + key + "\"");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

long require_integer(const ordered_json& obj, const char* key, const std::string& path,
                     std::size_t line_no) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) {
        throw ParseError(path, line_no, std::string("missing integer field \"") + key + "\"");
    }
    return obj[key].get<long>();
}

}  // namespace

CatalogIndex::CatalogIndex(std::vector<SoftwareRecord> softwares,
                           std::vector<PublicationRecord> publications)
    : softwares_(std::move(softwares)), publications_(std::move(publications)) {
    for (std::size_t i = 0; i < publications_.size(); ++i) {
        const PublicationRecord& pub = publications_[i];
        if (pub.id.empty()) {
            throw ValidationError("publication with empty id");
        }
        if (!publication_by_id_.emplace(pub.id, i).second) {
            throw ValidationError("duplicate publication id '" + pub.id + "'");
        }
        if (pub.year < 1900 || pub.year > 2100) {
            throw ValidationError("publication '" + pub.id + "' has out-of-range year " +
                                  std::to_string(pub.year));
        }
        if (pub.citations < 0) {
            throw ValidationError("publication '" + pub.id + "' has negative citations");
        }
    }
    for (std::size_t i = 0; i < softwares_.size(); ++i) {
        const SoftwareRecord& sw = softwares_[i];
        if (sw.id.empty()) {
            throw ValidationError("software with empty id");
        }
        if (!software_by_id_.emplace(sw.id, i).second) {
            throw ValidationError("duplicate software id '" + sw.id + "'");
        }
        for (const std::string& url : sw.urls) {
            if (!is_valid_http_url(url)) {
                throw ValidationError("software '" + sw.id + "' has invalid URL '" + url + "'");
            }
        }
        for (const std::string& pub_id : sw.publication_ids) {
            if (publication_by_id_.find(pub_id) == publication_by_id_.end()) {
                throw ValidationError("software '" + sw.id +
                                      "' references unknown publication '" + pub_id + "'");
            }
        }
    }
}

const SoftwareRecord* CatalogIndex::find_software(const std::string& id) const {
    auto it = software_by_id_.find(id);
    return it == software_by_id_.end() ? nullptr : &softwares_[it->second];
}

const PublicationRecord* CatalogIndex::find_publication(const std::string& id) const {
    auto it = publication_by_id_.find(id);
    return it == publication_by_id_.end() ? nullptr : &publications_[it->second];
}

CatalogIndex load_catalog(const std::string& software_path,
                          const std::string& publications_path) {
    std::vector<PublicationRecord> publications;
    for_each_line(publications_path, [&](std::size_t line_no, const std::string& line) {
        ordered_json obj = parse_json_line(publications_path, line_no, line);
        PublicationRecord pub;
        pub.id = require_string(obj, "id", publications_path, line_no);
        pub.title = require_string(obj, "title", publications_path, line_no);
        pub.abstract = require_string(obj, "abstract", publications_path, line_no);
        pub.references = require_string_array(obj, "references", publications_path, line_no);
        pub.year = static_cast<int>(require_integer(obj, "year", publications_path, line_no));
        pub.citations = require_integer(obj, "citations", publications_path, line_no);
        publications.push_back(std::move(pub));
    });

    std::vector<SoftwareRecord> softwares;
    for_each_line(software_path, [&](std::size_t line_no, const std::string& line) {
        ordered_json obj = parse_json_line(software_path, line_no, line);
        SoftwareRecord sw;
        sw.id = require_string(obj, "id", software_path, line_no);
        sw.name = require_string(obj, "name", software_path, line_no);
        sw.aliases = require_string_array(obj, "aliases", software_path, line_no);
        sw.urls = require_string_array(obj, "urls", software_path, line_no);
        sw.publication_ids =
            require_string_array(obj, "publication_ids", software_path, line_no);
        softwares.push_back(std::move(sw));
    });

    return CatalogIndex(std::move(softwares), std::move(publications));
}

std::string emit_software_jsonl(const std::vector<SoftwareRecord>& softwares) {
    std::ostringstream out;
    for (const SoftwareRecord& sw : softwares) {
        ordered_json obj;
        obj["id"] = sw.id;
        obj["name"] = sw.name;
        obj["aliases"] = sw.aliases;
        obj["urls"] = sw.urls;
        obj["publication_ids"] = sw.publication_ids;
        out << obj.dump() << '\n';
    }
    return out.str();
}

std::string emit_publications_jsonl(const std::vector<PublicationRecord>& publications) {
    std::ostringstream out;
    for (const PublicationRecord& pub : publications) {
        ordered_json obj;
        obj["id"] = pub.id;
        obj["title"] = pub.title;
        obj["abstract"] = pub.abstract;
        obj["references"] = pub.references;
        obj["year"] = pub.year;
        obj["citations"] = pub.citations;
        out << obj.dump() << '\n';
    }
    return out.str();
}

const PublicationRecord& top_publication(const SoftwareRecord& sw, const CatalogIndex& index) {
    if (sw.publication_ids.empty()) {
        throw ValidationError("software '" + sw.id + "' has no publications");
    }
    const PublicationRecord* best = nullptr;
    for (const std::string& pub_id : sw.publication_ids) {
        const PublicationRecord* pub = index.find_publication(pub_id);
        if (pub == nullptr) {
            throw ValidationError("software '" + sw.id +
                                  "' references unknown publication '" + pub_id + "'");
        }
        if (best == nullptr) {
            best = pub;
            continue;
        }
        if (pub->citations != best->citations) {
            if (pub->citations > best->citations) best = pub;
        } else if (pub->year != best->year) {
            if (pub->year < best->year) best = pub;
        } else if (pub->id < best->id) {
            best = pub;
        }
    }
    return *best;
}

}  // namespace archivelink
