// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archivelink/archive_client.hpp"
#include "archivelink/catalog.hpp"
#include "archivelink/temporal_linker.hpp"

namespace archivelink {

/// The five kinds of information a software page can offer.
enum class Category { documentation, publications, downloads, open_source, updates_news };

inline constexpr std::size_t kCategoryCount = 5;

std::string_view to_string(Category category);
Category category_from_string(std::string_view s);

/// Per-page flags, one per Category. The flags are independent: an
/// open-source page does not imply a downloads page.
struct ContentProfile {
    bool documentation = false;
    bool publications = false;
    bool downloads = false;
    bool open_source = false;
    bool updates_news = false;

    bool get(Category c) const;
    void set(Category c, bool value);

    bool operator==(const ContentProfile&) const = default;
};

/// Detection rules for one category. `keyword_patterns` are lowercase
/// substrings matched against link texts and headings; `href_patterns`
/// match link targets — patterns starting with '.' and containing no '/'
/// are treated as path suffixes (".tar.gz"), everything else as a substring
/// of the whole URL.
struct CategoryRule {
    Category category = Category::documentation;
    std::vector<std::string> keyword_patterns;
    std::vector<std::string> href_patterns;
};

/// The built-in ruleset (same content as the shipped default_rules.json).
std::vector<CategoryRule> default_rules();

/// Loads a ruleset file: a JSON object mapping category name to
/// {"keywords": [...], "hrefs": [...]}. Every category must end up with at
/// least one pattern. Patterns are lowercased on load.
std::vector<CategoryRule> load_rules(const std::string& path);

/// Pure page classification: a category is set iff any link's text or any
/// heading contains one of its keyword patterns, or any link target matches
/// one of its href patterns (all comparisons on lowercased text).
ContentProfile classify(std::string_view html, std::string_view base_url,
                        std::span<const CategoryRule> rules);

/// Picks the witness capture for a linked software — the in-year witness
/// when present, otherwise the latest OK capture over all its URLs — then
/// fetches and classifies its body. Returns nullopt for not_archived
/// softwares and for unavailable bodies (the latter with a warning on
/// stderr); batch callers never see an exception.
std::optional<ContentProfile> profile_software(const SoftwareRecord& sw,
                                               const LinkResult& lr, ArchiveClient& client,
                                               std::span<const CategoryRule> rules);

}  // namespace archivelink
