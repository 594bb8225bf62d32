// SPDX-License-Identifier: Apache-2.0
#include "archivelink/content_classifier.hpp"

#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "archivelink/detail/text.hpp"
#include "archivelink/errors.hpp"
#include "archivelink/html.hpp"
#include "archivelink/url.hpp"

namespace archivelink {

using detail::to_lower_ascii;

std::string_view to_string(Category category) {
    switch (category) {
        case Category::documentation: return "documentation";
        case Category::publications: return "publications";
        case Category::downloads: return "downloads";
        case Category::open_source: return "open_source";
        case Category::updates_news: return "updates_news";
    }
    return "?";
}

Category category_from_string(std::string_view s) {
    if (s == "documentation") return Category::documentation;
    if (s == "publications") return Category::publications;
    if (s == "downloads") return Category::downloads;
    if (s == "open_source") return Category::open_source;
    if (s == "updates_news") return Category::updates_news;
    throw ValidationError("unknown category '" + std::string(s) + "'");
}

bool ContentProfile::get(Category c) const {
    switch (c) {
        case Category::documentation: return documentation;
        case Category::publications: return publications;
        case Category::downloads: return downloads;
        case Category::open_source: return open_source;
        case Category::updates_news: return updates_news;
    }
    return false;
}

void ContentProfile::set(Category c, bool value) {
    switch (c) {
        case Category::documentation: documentation = value; break;
        case Category::publications: publications = value; break;
        case Category::downloads: downloads = value; break;
        case Category::open_source: open_source = value; break;
        case Category::updates_news: updates_news = value; break;
    }
}

std::vector<CategoryRule> default_rules() {
    return {
        {Category::documentation,
         {"documentation", "manual", "user guide", "tutorial", "docs", "faq", "handbook",
          "reference"},
         {}},
        {Category::publications,
         {"publications", "papers", "bibliography", "cite", "references"},
         {"doi.org", "arxiv.org"}},
        {Category::downloads,
         {"download", "install", "release"},
         {".zip", ".tar.gz", ".tgz", ".tar.bz2", ".exe", ".dmg", ".jar"}},
        {Category::open_source,
         {"source code", "git", "license"},
         {"github.com", "gitlab.com", "sourceforge.net", "bitbucket.org"}},
        {Category::updates_news,
         {"news", "changelog", "change log", "release notes", "what's new", "history"},
         {}},
    };
}

std::vector<CategoryRule> load_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open ruleset file '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ParseError(path, 1, "ruleset is not a JSON object");
    }
    std::vector<CategoryRule> rules;
    for (auto& [key, value] : doc.items()) {
        CategoryRule rule;
        rule.category = category_from_string(key);
        if (value.contains("keywords")) {
            for (const auto& kw : value["keywords"]) {
                rule.keyword_patterns.push_back(to_lower_ascii(kw.get<std::string>()));
            }
        }
        if (value.contains("hrefs")) {
            for (const auto& href : value["hrefs"]) {
                rule.href_patterns.push_back(to_lower_ascii(href.get<std::string>()));
            }
        }
        if (rule.keyword_patterns.empty() && rule.href_patterns.empty()) {
            throw ValidationError("category '" + key + "' has no patterns");
        }
        rules.push_back(std::move(rule));
    }
    if (rules.size() != kCategoryCount) {
        throw ValidationError("ruleset must cover all five categories, found " +
                              std::to_string(rules.size()));
    }
    return rules;
}

namespace {

bool href_matches(const std::string& href_lower, const std::string& pattern) {
    if (!pattern.empty() && pattern.front() == '.' &&
        pattern.find('/') == std::string::npos) {
        // suffix match against the path, query ignored
        std::string path = href_lower;
        std::size_t q = path.find_first_of("?#");
        if (q != std::string::npos) path.resize(q);
        return path.size() >= pattern.size() &&
               path.compare(path.size() - pattern.size(), pattern.size(), pattern) == 0;
    }
    return href_lower.find(pattern) != std::string::npos;
}

}  // namespace

ContentProfile classify(std::string_view html, std::string_view base_url,
                        std::span<const CategoryRule> rules) {
    std::vector<LinkRef> links = extract_links(html, base_url);
    std::vector<std::string> headings = extract_headings(html);

    std::vector<std::string> texts;
    std::vector<std::string> hrefs;
    texts.reserve(links.size() + headings.size());
    hrefs.reserve(links.size());
    for (const LinkRef& link : links) {
        texts.push_back(to_lower_ascii(link.text));
        hrefs.push_back(to_lower_ascii(link.href));
    }
    for (const std::string& heading : headings) {
        texts.push_back(to_lower_ascii(heading));
    }

    ContentProfile profile;
    for (const CategoryRule& rule : rules) {
        bool hit = false;
        for (const std::string& pattern : rule.keyword_patterns) {
            for (const std::string& text : texts) {
                if (text.find(pattern) != std::string::npos) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        if (!hit) {
            for (const std::string& pattern : rule.href_patterns) {
                for (const std::string& href : hrefs) {
                    if (href_matches(href, pattern)) {
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
        }
        if (hit) profile.set(rule.category, true);
    }
    return profile;
}

std::optional<ContentProfile> profile_software(const SoftwareRecord& sw,
                                               const LinkResult& lr, ArchiveClient& client,
                                               std::span<const CategoryRule> rules) {
    if (lr.status == LinkStatus::not_archived) return std::nullopt;
    try {
        // The serialized witness carries only (timestamp, digest), so the
        // full capture is re-derived from the query layer, which is cached.
        TimeMap merged;
        for (const std::string& url : sw.urls) {
            merged = merge_timemaps(merged, client.query_captures(url));
        }
        TimeMap usable = ok_captures(merged);
        if (usable.empty()) return std::nullopt;

        const Capture* witness = nullptr;
        if (lr.status == LinkStatus::past_archived) {
            for (const Capture& c : usable.captures) {
                if (c.year() == lr.top_year) witness = &c;  // last in-year wins
            }
        }
        if (witness == nullptr) witness = &usable.captures.back();

        std::string body = client.fetch_capture_body(*witness);
        return classify(body, witness->original, rules);
    } catch (const Error& e) {
        std::cerr << "warning: " << sw.id << ": body unavailable: " << e.what() << "\n";
        return std::nullopt;
    }
}

}  // namespace archivelink
