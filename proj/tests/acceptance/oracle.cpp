// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace oracle {

using nlohmann::ordered_json;

namespace {

struct Row {  // one CDX line, kept as raw strings
    std::string urlkey, timestamp, original, mimetype, status, digest, length;
};

struct Pub {
    std::string id;
    int year = 0;
    long citations = 0;
};

struct Soft {
    std::string id;
    std::vector<std::string> urls;
    std::vector<std::string> pub_ids;
};

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("oracle: cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::string lower(std::string s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return s;
}

// exact rational rounding, half to even, rendered with four decimals
std::string frac(long count, long denom) {
    if (denom <= 0) return "0.0000";
    long long scaled = static_cast<long long>(count) * 10000;
    long long q = scaled / denom;
    long long r = scaled % denom;
    if (2 * r > denom || (2 * r == denom && q % 2 == 1)) ++q;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%04lld", q / 10000, q % 10000);
    return buf;
}

// the default category rules, frozen here on purpose
struct Rules {
    std::vector<std::string> keywords;
    std::vector<std::string> hrefs;
};

const std::vector<std::pair<std::string, Rules>>& rules_table() {
    static const std::vector<std::pair<std::string, Rules>> table = {
        {"documentation",
         {{"documentation", "manual", "user guide", "tutorial", "docs", "faq", "handbook",
           "reference"},
          {}}},
        {"publications",
         {{"publications", "papers", "bibliography", "cite", "references"},
          {"doi.org", "arxiv.org"}}},
        {"downloads",
         {{"download", "install", "release"},
          {".zip", ".tar.gz", ".tgz", ".tar.bz2", ".exe", ".dmg", ".jar"}}},
        {"open_source",
         {{"source code", "git", "license"},
          {"github.com", "gitlab.com", "sourceforge.net", "bitbucket.org"}}},
        {"updates_news",
         {{"news", "changelog", "change log", "release notes", "what's new", "history"},
          {}}},
    };
    return table;
}

bool href_hit(const std::string& href, const std::string& pattern) {
    if (!pattern.empty() && pattern.front() == '.' &&
        pattern.find('/') == std::string::npos) {
        std::string path = href.substr(0, href.find_first_of("?#"));
        return path.size() >= pattern.size() &&
               path.compare(path.size() - pattern.size(), pattern.size(), pattern) == 0;
    }
    return href.find(pattern) != std::string::npos;
}

std::map<std::string, bool> classify_body(const std::string& body) {
    // the fixture's pages are plain enough for regex scanning
    static const std::regex anchor(R"re(<a\s+href=["']([^"']*)["']\s*>([^<]*)</a>)re",
                                   std::regex::icase);
    static const std::regex heading(R"re(<h[1-6]>([^<]*)</h[1-6]>)re", std::regex::icase);

    std::vector<std::string> texts;
    std::vector<std::string> hrefs;
    for (auto it = std::sregex_iterator(body.begin(), body.end(), anchor);
         it != std::sregex_iterator(); ++it) {
        hrefs.push_back(lower((*it)[1].str()));
        texts.push_back(lower((*it)[2].str()));
    }
    for (auto it = std::sregex_iterator(body.begin(), body.end(), heading);
         it != std::sregex_iterator(); ++it) {
        texts.push_back(lower((*it)[1].str()));
    }

    std::map<std::string, bool> flags;
    for (const auto& [category, rules] : rules_table()) {
        bool hit = false;
        for (const std::string& kw : rules.keywords) {
            for (const std::string& text : texts) {
                if (text.find(kw) != std::string::npos) hit = true;
            }
        }
        for (const std::string& pattern : rules.hrefs) {
            for (const std::string& href : hrefs) {
                if (href_hit(href, pattern)) hit = true;
            }
        }
        flags[category] = hit;
    }
    return flags;
}

}  // namespace

Tables recompute(const std::string& software_path, const std::string& publications_path,
                 const std::string& archive_dir) {
    // catalog
    std::map<std::string, Pub> pubs;
    for (const std::string& line : read_lines(publications_path)) {
        ordered_json obj = ordered_json::parse(line);
        Pub p;
        p.id = obj["id"].get<std::string>();
        p.year = obj["year"].get<int>();
        p.citations = obj["citations"].get<long>();
        pubs[p.id] = p;
    }
    std::vector<Soft> softs;
    for (const std::string& line : read_lines(software_path)) {
        ordered_json obj = ordered_json::parse(line);
        Soft s;
        s.id = obj["id"].get<std::string>();
        for (const auto& u : obj["urls"]) s.urls.push_back(u.get<std::string>());
        for (const auto& p : obj["publication_ids"]) s.pub_ids.push_back(p.get<std::string>());
        softs.push_back(std::move(s));
    }

    // archive index
    std::vector<Row> rows;
    for (const std::string& line : read_lines(archive_dir + "/captures.cdx")) {
        std::istringstream in(line);
        Row r;
        in >> r.urlkey >> r.timestamp >> r.original >> r.mimetype >> r.status >> r.digest >>
            r.length;
        rows.push_back(std::move(r));
    }

    Tables out;
    std::map<int, std::array<long, 4>> yearly;  // year -> total archived past changed
    long profiled = 0;
    std::map<std::string, long> category_counts;
    for (const auto& [category, unused] : rules_table()) category_counts[category] = 0;

    for (const Soft& sw : softs) {
        // top publication: max citations, then earliest year, then smallest id
        const Pub* top = nullptr;
        for (const std::string& pid : sw.pub_ids) {
            const Pub& p = pubs.at(pid);
            if (top == nullptr || p.citations > top->citations ||
                (p.citations == top->citations &&
                 (p.year < top->year || (p.year == top->year && p.id < top->id)))) {
                top = &p;
            }
        }
        if (top == nullptr) throw std::runtime_error("oracle: no publications for " + sw.id);
        const std::string top_year = std::to_string(top->year);

        // all OK captures of any listed URL, by recorded original URL
        std::vector<const Row*> captures;
        for (const Row* row = rows.data(); row != rows.data() + rows.size(); ++row) {
            bool listed = false;
            for (const std::string& url : sw.urls) {
                if (row->original == url) listed = true;
            }
            if (!listed) continue;
            if (row->status != "200" && row->status != "-") continue;
            captures.push_back(row);
        }
        std::sort(captures.begin(), captures.end(), [](const Row* a, const Row* b) {
            if (a->timestamp != b->timestamp) return a->timestamp < b->timestamp;
            return a->digest < b->digest;
        });
        captures.erase(std::unique(captures.begin(), captures.end(),
                                   [](const Row* a, const Row* b) {
                                       return a->urlkey == b->urlkey &&
                                              a->timestamp == b->timestamp &&
                                              a->digest == b->digest;
                                   }),
                       captures.end());

        const Row* witness = nullptr;
        for (const Row* c : captures) {
            if (c->timestamp.substr(0, 4) == top_year) witness = c;
        }
        std::string status = captures.empty() ? "not_archived"
                             : witness != nullptr ? "past_archived"
                                                  : "archived";
        const Row* later = nullptr;
        if (witness != nullptr) {
            for (const Row* c : captures) {
                if (c->timestamp > witness->timestamp && c->digest != witness->digest) {
                    later = c;
                    break;
                }
            }
        }

        ordered_json obj;
        obj["software_id"] = sw.id;
        obj["top_publication_id"] = top->id;
        obj["top_year"] = top->year;
        obj["status"] = status;
        obj["changed"] = later != nullptr;
        if (witness != nullptr) {
            obj["witness_in_year"] = {{"timestamp", witness->timestamp},
                                      {"digest", witness->digest}};
        } else {
            obj["witness_in_year"] = nullptr;
        }
        if (later != nullptr) {
            obj["witness_later"] = {{"timestamp", later->timestamp}, {"digest", later->digest}};
        } else {
            obj["witness_later"] = nullptr;
        }
        obj["total_captures"] = static_cast<long>(captures.size());
        out.link_result_lines.push_back(obj.dump());

        auto& row = yearly[top->year];
        row[0] += 1;
        if (status != "not_archived") row[1] += 1;
        if (status == "past_archived") row[2] += 1;
        if (later != nullptr) row[3] += 1;

        // content profile of the witness page
        if (status == "not_archived") continue;
        const Row* page = witness != nullptr ? witness : captures.back();
        std::string dir_key = page->urlkey;
        std::replace(dir_key.begin(), dir_key.end(), '/', '_');
        std::ifstream body_in(archive_dir + "/bodies/" + dir_key + "/" + page->timestamp +
                              ".html");
        if (!body_in) continue;  // no body, no profile
        std::ostringstream buf;
        buf << body_in.rdbuf();
        ++profiled;
        for (const auto& [category, hit] : classify_body(buf.str())) {
            if (hit) category_counts[category] += 1;
        }
    }

    // tables
    std::ostringstream ycsv, pcsv;
    ycsv << "year,total,archived,past_archived,past_changed\n";
    pcsv << "year,frac_archived,frac_past_archived,frac_past_changed\n";
    for (const auto& [year, row] : yearly) {
        ycsv << year << ',' << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3]
             << '\n';
        pcsv << year << ',' << frac(row[1], row[0]) << ',' << frac(row[2], row[0]) << ','
             << frac(row[3], row[0]) << '\n';
    }
    out.yearly_csv = ycsv.str();
    out.plotdata_csv = pcsv.str();

    std::ostringstream ccsv;
    ccsv << "category,count,denom_all,denom_profiled,fraction_all,fraction_profiled\n";
    const long denom_all = static_cast<long>(softs.size());
    for (const auto& [category, unused] : rules_table()) {
        long count = category_counts[category];
        ccsv << category << ',' << count << ',' << denom_all << ',' << profiled << ','
             << frac(count, denom_all) << ',' << frac(count, profiled) << '\n';
    }
    out.categories_csv = ccsv.str();
    return out;
}

}  // namespace oracle
