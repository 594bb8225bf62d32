// SPDX-License-Identifier: Apache-2.0
#include "archivelink/records_io.hpp"

#include <nlohmann/json.hpp>

#include "archivelink/errors.hpp"

namespace archivelink {

using nlohmann::ordered_json;

std::string mention_to_json(const Mention& mention) {
    ordered_json obj;
    obj["publication_id"] = mention.publication_id;
    obj["software_name"] = mention.software_name;
    obj["matched_alias"] = mention.matched_alias;
    obj["field"] = std::string(to_string(mention.field));
    obj["trigger"] = mention.trigger;
    obj["token_offset"] = mention.token_offset;
    return obj.dump();
}

namespace {

ordered_json witness_to_json(const std::optional<Capture>& witness) {
    if (!witness) return nullptr;
    ordered_json obj;
    obj["timestamp"] = witness->timestamp;
    obj["digest"] = witness->digest;
    return obj;
}

std::optional<Capture> witness_from_json(const ordered_json& value) {
    if (value.is_null()) return std::nullopt;
    Capture c;
    c.timestamp = value.at("timestamp").get<std::string>();
    c.digest = value.at("digest").get<std::string>();
    return c;
}

}  // namespace

std::string link_result_to_json(const LinkResult& lr) {
    ordered_json obj;
    obj["software_id"] = lr.software_id;
    obj["top_publication_id"] = lr.top_publication_id;
    obj["top_year"] = lr.top_year;
    obj["status"] = std::string(to_string(lr.status));
    obj["changed"] = lr.changed;
    obj["witness_in_year"] = witness_to_json(lr.witness_in_year);
    obj["witness_later"] = witness_to_json(lr.witness_later);
    obj["total_captures"] = lr.total_captures;
    return obj.dump();
}

LinkResult link_result_from_json(const std::string& line) {
    ordered_json obj = ordered_json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
        throw ParseError("bad link result line: '" + line + "'");
    }
    LinkResult lr;
    lr.software_id = obj.at("software_id").get<std::string>();
    lr.top_publication_id = obj.at("top_publication_id").get<std::string>();
    lr.top_year = obj.at("top_year").get<int>();
    lr.status = link_status_from_string(obj.at("status").get<std::string>());
    lr.changed = obj.at("changed").get<bool>();
    lr.witness_in_year = witness_from_json(obj.at("witness_in_year"));
    lr.witness_later = witness_from_json(obj.at("witness_later"));
    lr.total_captures = obj.at("total_captures").get<long>();
    return lr;
}

std::string profile_to_json(const std::string& software_id, const ContentProfile& profile) {
    ordered_json obj;
    obj["software_id"] = software_id;
    obj["documentation"] = profile.documentation;
    obj["publications"] = profile.publications;
    obj["downloads"] = profile.downloads;
    obj["open_source"] = profile.open_source;
    obj["updates_news"] = profile.updates_news;
    return obj.dump();
}

ProfileRecord profile_from_json(const std::string& line) {
    ordered_json obj = ordered_json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
        throw ParseError("bad profile line: '" + line + "'");
    }
    ProfileRecord record;
    record.software_id = obj.at("software_id").get<std::string>();
    record.profile.documentation = obj.at("documentation").get<bool>();
    record.profile.publications = obj.at("publications").get<bool>();
    record.profile.downloads = obj.at("downloads").get<bool>();
    record.profile.open_source = obj.at("open_source").get<bool>();
    record.profile.updates_news = obj.at("updates_news").get<bool>();
    return record;
}

}  // namespace archivelink
