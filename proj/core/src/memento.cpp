// SPDX-License-Identifier: Apache-2.0
#include "archivelink/memento.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <vector>

#include "archivelink/detail/text.hpp"
#include "archivelink/errors.hpp"

namespace archivelink {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "jan", "feb", "mar", "apr", "may", "jun",
    "jul", "aug", "sep", "oct", "nov", "dec"};

struct LinkEntry {
    std::string target;
    std::map<std::string, std::string> params;
};

void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// Reads one parameter value: either a quoted string or a token.
std::string read_param_value(std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    std::string value;
    if (pos < s.size() && s[pos] == '"') {
        ++pos;
        while (pos < s.size() && s[pos] != '"') {
            if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
            value.push_back(s[pos++]);
        }
        if (pos >= s.size()) throw ParseError("unterminated quoted string in link-format");
        ++pos;
    } else {
        while (pos < s.size() && s[pos] != ';' && s[pos] != ',' &&
               !std::isspace(static_cast<unsigned char>(s[pos]))) {
            value.push_back(s[pos++]);
        }
    }
    return value;
}

std::vector<LinkEntry> parse_link_entries(std::string_view body) {
    std::vector<LinkEntry> entries;
    std::size_t pos = 0;
    while (true) {
        skip_ws(body, pos);
        if (pos >= body.size()) break;
        if (body[pos] != '<') {
            throw ParseError("expected '<' at offset " + std::to_string(pos) +
                             " in link-format body");
        }
        std::size_t close = body.find('>', pos);
        if (close == std::string_view::npos) {
            throw ParseError("missing closing '>' in link-format body");
        }
        LinkEntry entry;
        entry.target = std::string(body.substr(pos + 1, close - pos - 1));
        pos = close + 1;

        while (true) {
            skip_ws(body, pos);
            if (pos >= body.size() || body[pos] == ',') break;
            if (body[pos] != ';') {
                throw ParseError("expected ';' or ',' after link entry at offset " +
                                 std::to_string(pos));
            }
            ++pos;
            skip_ws(body, pos);
            std::string name;
            while (pos < body.size() && body[pos] != '=' && body[pos] != ';' &&
                   body[pos] != ',' && !std::isspace(static_cast<unsigned char>(body[pos]))) {
                name.push_back(detail::ascii_lower(body[pos++]));
            }
            skip_ws(body, pos);
            std::string value;
            if (pos < body.size() && body[pos] == '=') {
                ++pos;
                value = read_param_value(body, pos);
            }
            if (!name.empty()) entry.params.emplace(std::move(name), std::move(value));
        }
        entries.push_back(std::move(entry));
        if (pos < body.size() && body[pos] == ',') ++pos;
    }
    return entries;
}

bool rel_contains_memento(const std::string& rel) {
    std::size_t start = 0;
    while (start <= rel.size()) {
        std::size_t end = rel.find(' ', start);
        std::string_view word(rel.data() + start,
                              (end == std::string::npos ? rel.size() : end) - start);
        if (word == "memento") return true;
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return false;
}

}  // namespace

std::string rfc1123_to_timestamp(std::string_view datetime) {
    // tokens: [weekday,] day month year hh:mm:ss GMT
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : datetime) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (!tokens.empty() && !tokens.front().empty() && tokens.front().back() == ',') {
        tokens.erase(tokens.begin());
    }
    if (tokens.size() < 4) {
        throw ParseError("bad RFC 1123 datetime '" + std::string(datetime) + "'");
    }
    const std::string& day_s = tokens[0];
    const std::string& mon_s = tokens[1];
    const std::string& year_s = tokens[2];
    const std::string& time_s = tokens[3];

    int day = 0, year = 0;
    auto day_res = std::from_chars(day_s.data(), day_s.data() + day_s.size(), day);
    auto year_res = std::from_chars(year_s.data(), year_s.data() + year_s.size(), year);
    if (day_res.ec != std::errc{} || year_res.ec != std::errc{}) {
        throw ParseError("bad day/year in datetime '" + std::string(datetime) + "'");
    }
    std::string mon_lower = detail::to_lower_ascii(mon_s);
    int month = 0;
    for (std::size_t i = 0; i < kMonths.size(); ++i) {
        if (mon_lower == kMonths[i]) {
            month = static_cast<int>(i) + 1;
            break;
        }
    }
    if (month == 0) {
        throw ParseError("bad month '" + mon_s + "' in datetime");
    }
    int hh = 0, mm = 0, ss = 0;
    if (std::sscanf(time_s.c_str(), "%d:%d:%d", &hh, &mm, &ss) != 3) {
        throw ParseError("bad time-of-day '" + time_s + "' in datetime");
    }
    char buf[15];
    std::snprintf(buf, sizeof buf, "%04d%02d%02d%02d%02d%02d", year, month, day, hh, mm, ss);
    std::string ts(buf);
    if (!is_valid_timestamp(ts)) {
        throw ParseError("datetime '" + std::string(datetime) +
                         "' is not a valid calendar instant");
    }
    return ts;
}

TimeMap parse_timemap_linkformat(std::string_view body, std::string_view urlkey) {
    std::vector<Capture> captures;
    for (const LinkEntry& entry : parse_link_entries(body)) {
        auto rel = entry.params.find("rel");
        if (rel == entry.params.end() || !rel_contains_memento(rel->second)) continue;
        auto datetime = entry.params.find("datetime");
        if (datetime == entry.params.end()) {
            throw ParseError("memento link without datetime: <" + entry.target + ">");
        }
        Capture c;
        c.urlkey = std::string(urlkey);
        c.timestamp = rfc1123_to_timestamp(datetime->second);
        c.original = entry.target;
        c.mimetype = "";
        c.digest = "TM-" + c.timestamp;
        captures.push_back(std::move(c));
    }
    return TimeMap::build({std::string(urlkey)}, std::move(captures));
}

}  // namespace archivelink
