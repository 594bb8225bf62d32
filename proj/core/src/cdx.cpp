// SPDX-License-Identifier: Apache-2.0
#include "archivelink/cdx.hpp"

#include <algorithm>
#include <charconv>

#include "archivelink/errors.hpp"

namespace archivelink {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int to_int(std::string_view s) {
    int value = 0;
    std::from_chars(s.data(), s.data() + s.size(), value);
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        if (pos >= line.size()) break;
        std::size_t end = line.find(' ', pos);
        if (end == std::string_view::npos) end = line.size();
        fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

}  // namespace

int Capture::year() const {
    return to_int(std::string_view(timestamp).substr(0, 4));
}

bool capture_less(const Capture& a, const Capture& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.digest < b.digest;
}

bool is_valid_timestamp(std::string_view ts) {
    if (ts.size() != 14 || !all_digits(ts)) return false;
    int year = to_int(ts.substr(0, 4));
    int month = to_int(ts.substr(4, 2));
    int day = to_int(ts.substr(6, 2));
    int hour = to_int(ts.substr(8, 2));
    int minute = to_int(ts.substr(10, 2));
    int second = to_int(ts.substr(12, 2));
    if (month < 1 || month > 12 || day < 1) return false;
    static const int days_in_month[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int max_day = days_in_month[month - 1];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) max_day = 29;
    if (day > max_day) return false;
    return hour < 24 && minute < 60 && second < 60;
}

Capture parse_cdx_line(std::string_view line) {
    std::vector<std::string_view> fields = split_fields(line);
    if (fields.size() < 7) {
        throw ParseError("CDX line has " + std::to_string(fields.size()) +
                         " fields, expected at least 7: '" + std::string(line) + "'");
    }
    if (!is_valid_timestamp(fields[1])) {
        throw ParseError("bad CDX timestamp '" + std::string(fields[1]) + "'");
    }
    Capture c;
    c.urlkey = std::string(fields[0]);
    c.timestamp = std::string(fields[1]);
    c.original = std::string(fields[2]);
    c.mimetype = std::string(fields[3]);
    if (fields[4] != "-") {
        if (!all_digits(fields[4])) {
            throw ParseError("bad CDX statuscode '" + std::string(fields[4]) + "'");
        }
        c.statuscode = to_int(fields[4]);
    }
    c.digest = std::string(fields[5]);
    if (c.digest.empty() || c.digest == "-") {
        throw ParseError("empty CDX digest in '" + std::string(line) + "'");
    }
    if (fields[6] != "-") {
        if (!all_digits(fields[6])) {
            throw ParseError("bad CDX length '" + std::string(fields[6]) + "'");
        }
        long length = 0;
        auto res = std::from_chars(fields[6].data(), fields[6].data() + fields[6].size(),
                                   length);
        if (res.ec != std::errc{}) {
            throw ParseError("bad CDX length '" + std::string(fields[6]) + "'");
        }
        c.length = length;
    }
    return c;
}

std::string format_cdx_line(const Capture& c) {
    std::string out = c.urlkey;
    out += ' ';
    out += c.timestamp;
    out += ' ';
    out += c.original;
    out += ' ';
    out += c.mimetype;
    out += ' ';
    out += c.statuscode ? std::to_string(*c.statuscode) : "-";
    out += ' ';
    out += c.digest;
    out += ' ';
    out += c.length ? std::to_string(*c.length) : "-";
    return out;
}

TimeMap TimeMap::build(std::vector<std::string> urlkeys, std::vector<Capture> captures) {
    TimeMap tm;
    std::sort(urlkeys.begin(), urlkeys.end());
    urlkeys.erase(std::unique(urlkeys.begin(), urlkeys.end()), urlkeys.end());
    std::sort(captures.begin(), captures.end(), capture_less);
    tm.urlkeys = std::move(urlkeys);
    tm.captures = std::move(captures);
    return tm;
}

TimeMap merge_timemaps(const TimeMap& a, const TimeMap& b) {
    std::vector<std::string> keys = a.urlkeys;
    keys.insert(keys.end(), b.urlkeys.begin(), b.urlkeys.end());

    std::vector<Capture> captures;
    captures.reserve(a.captures.size() + b.captures.size());
    std::merge(a.captures.begin(), a.captures.end(), b.captures.begin(), b.captures.end(),
               std::back_inserter(captures), capture_less);
    auto same_identity = [](const Capture& x, const Capture& y) {
        return x.urlkey == y.urlkey && x.timestamp == y.timestamp && x.digest == y.digest;
    };
    captures.erase(std::unique(captures.begin(), captures.end(), same_identity),
                   captures.end());
    return TimeMap::build(std::move(keys), std::move(captures));
}

}  // namespace archivelink
